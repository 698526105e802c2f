#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fsdem/core/types.hpp"
#include "fsdem/data/dataset.hpp"
#include "fsdem/evaluators/evaluator_config.hpp"

namespace fsdem {

struct KMeansResult {
    std::vector<int> labels;
    std::vector<std::vector<double>> centroids;
    double inertia = 0.0;
    /// Inertia after each assignment step of the winning restart.
    std::vector<double> inertia_history;
};

/// Lloyd's algorithm with k-means++ seeding; keeps the restart with the lowest
/// inertia (earliest wins ties). A restart stops when labels stop changing or
/// the total squared centroid shift falls below tol times the mean column
/// variance. Empty clusters are re-seeded at the points farthest from their
/// centroids. Throws invalid-input unless 1 <= clusters <= rows.
KMeansResult kmeans(const Matrix& points, int clusters, const KMeansConfig& cfg, std::uint64_t seed);

/// Cluster labels of the min-max scaled feature subset.
std::vector<int> kmeans_cluster(const Dataset& data, std::span<const FeatureIndex> features,
                                int clusters, const EvaluatorConfig& cfg);

}  // namespace fsdem
