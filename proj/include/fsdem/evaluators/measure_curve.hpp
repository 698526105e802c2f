#pragma once

#include <span>

#include "fsdem/core/observation_curve.hpp"
#include "fsdem/core/types.hpp"
#include "fsdem/data/dataset.hpp"
#include "fsdem/evaluators/evaluator_config.hpp"

namespace fsdem {

/// The configured measure M on one feature subset: k-NN CV accuracy, or
/// clustering accuracy of k-means with cfg.kmeans.clusters (default: the
/// number of classes).
double evaluate_measure(const Dataset& data, std::span<const FeatureIndex> features,
                        const EvaluatorConfig& cfg);

/// M(k) for every k in ks, using the k-prefix of a best-first ranking.
/// Throws invalid-input when ks is not sorted or leaves [1, ranking size].
ObservationCurve measure_curve(const Dataset& data, std::span<const FeatureIndex> ranking,
                               const EvaluatorConfig& cfg, std::span<const int> ks);

}  // namespace fsdem
