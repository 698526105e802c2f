#include "fsdem/selectors/random_ranking.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fsdem/core/error.hpp"

namespace fsdem {

FeatureRanking random_ranking(std::size_t d, std::uint64_t seed) {
    if (d == 0) fail(ErrorCode::invalid_input, "cannot rank zero features");
    std::vector<FeatureIndex> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return FeatureRanking::from_order(std::move(order));
}

}  // namespace fsdem
