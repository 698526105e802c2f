#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fsdem/data/dataset.hpp"
#include "fsdem/selectors/feature_ranking.hpp"

namespace fsdem {

struct ForestConfig {
    int trees = 100;
    /// Candidate features per split; nullopt means floor(sqrt(d)), at least 1.
    std::optional<int> features_per_split;
    /// nullopt grows trees until leaves are pure or too small to split.
    std::optional<int> max_depth;
    int min_samples_split = 2;

    void validate() const;
};

/// Mean decrease in Gini impurity per feature over a bagged ensemble of CART
/// trees. Each tree's importances are normalized before averaging and the
/// result sums to 1. Tree t draws from its own seed derived from (seed, t),
/// so the result does not depend on construction order.
/// Throws invalid-input for fewer than 2 rows or a single class.
std::vector<double> forest_importances(const Dataset& data, const ForestConfig& cfg,
                                       std::uint64_t seed);

FeatureRanking forest_importance_ranking(const Dataset& data, const ForestConfig& cfg,
                                         std::uint64_t seed);

}  // namespace fsdem
