#pragma once

#include <vector>

#include "fsdem/data/dataset.hpp"
#include "fsdem/selectors/feature_ranking.hpp"

namespace fsdem {

/// IG(Y; X_f) = H(Y) - H(Y | X_f) in bits for every feature, each column
/// discretized into equal-width bins.
std::vector<double> information_gain_scores(const Dataset& data, int bins);

/// Pearson chi-square of the binned feature-vs-class contingency table for
/// every feature. Empty bins are dropped before expected counts are formed,
/// so no smoothing is needed.
std::vector<double> chi2_scores(const Dataset& data, int bins);

/// Descending information gain, ties by ascending index. A single-class
/// dataset yields all-zero gains and a warning on the ranking.
FeatureRanking info_gain_ranking(const Dataset& data, int bins = 10);

/// Descending chi-square statistic, ties by ascending index.
FeatureRanking chi2_ranking(const Dataset& data, int bins = 10);

}  // namespace fsdem
