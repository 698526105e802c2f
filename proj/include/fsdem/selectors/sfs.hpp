#pragma once

#include <cstddef>
#include <cstdint>

#include "fsdem/data/dataset.hpp"
#include "fsdem/evaluators/evaluator_config.hpp"
#include "fsdem/selectors/feature_ranking.hpp"

namespace fsdem {

/// Greedy forward selection: each step adds the feature whose addition gives
/// the highest evaluator score (ties to the lowest index). The first k entries
/// are the add order; the remaining features follow in ascending index. The
/// evaluator runs with the given seed. Throws invalid-input unless 1 <= k <= d.
FeatureRanking sequential_forward_selection(const Dataset& data, const EvaluatorConfig& evaluator,
                                            std::size_t k, std::uint64_t seed);

}  // namespace fsdem
