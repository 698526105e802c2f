#pragma once

#include <span>

#include "fsdem/core/types.hpp"
#include "fsdem/data/dataset.hpp"
#include "fsdem/evaluators/evaluator_config.hpp"

namespace fsdem {

/// Mean accuracy of a k-NN classifier over stratified folds, restricted to
/// the given feature columns.
///
/// Columns are min-max scaled with the training fold's extremes, distances
/// are Euclidean, and a vote tie goes to the tied class with the nearest
/// member. When some class has fewer rows than cfg.folds the fold count
/// drops to that class size (see effective_folds). Deterministic given
/// cfg.seed. Throws invalid-input on an empty subset or an out-of-range index.
double knn_cv_accuracy(const Dataset& data, std::span<const FeatureIndex> features,
                       const EvaluatorConfig& cfg);

}  // namespace fsdem
