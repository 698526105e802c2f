#include "fsdem/selectors/feature_ranking.hpp"

#include <algorithm>
#include <numeric>

#include "fsdem/core/error.hpp"

namespace fsdem {

FeatureRanking FeatureRanking::from_order(std::vector<FeatureIndex> order) {
    if (order.empty()) fail(ErrorCode::invalid_input, "ranking of zero features");
    std::vector<bool> seen(order.size(), false);
    for (auto f : order) {
        if (f >= order.size() || seen[f]) {
            fail(ErrorCode::invalid_input, "ranking is not a permutation of 0..d-1");
        }
        seen[f] = true;
    }
    FeatureRanking r;
    r.order_ = std::move(order);
    return r;
}

FeatureRanking FeatureRanking::from_scores(std::span<const double> per_feature_scores) {
    std::vector<FeatureIndex> order(per_feature_scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](FeatureIndex l, FeatureIndex r) {
        return per_feature_scores[l] > per_feature_scores[r];
    });
    auto ranking = from_order(std::move(order));
    for (auto f : ranking.order_) ranking.scores_.push_back(per_feature_scores[f]);
    return ranking;
}

std::optional<std::span<const double>> FeatureRanking::scores() const {
    if (scores_.empty()) return std::nullopt;
    return std::span<const double>(scores_);
}

FeatureSubset FeatureRanking::prefix(std::size_t k) const {
    if (k > order_.size()) {
        fail(ErrorCode::invalid_input, "prefix longer than the ranking");
    }
    return FeatureSubset(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace fsdem
