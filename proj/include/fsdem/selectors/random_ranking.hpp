#pragma once

#include <cstddef>
#include <cstdint>

#include "fsdem/selectors/feature_ranking.hpp"

namespace fsdem {

/// Uniformly random permutation of 0..d-1 determined by the seed.
/// Throws invalid-input for d == 0.
FeatureRanking random_ranking(std::size_t d, std::uint64_t seed);

}  // namespace fsdem
