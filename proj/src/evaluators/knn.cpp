#include "fsdem/evaluators/knn.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "fsdem/core/error.hpp"
#include "fsdem/data/folds.hpp"

namespace fsdem {

namespace {

void check_subset(const Dataset& data, std::span<const FeatureIndex> features) {
    if (features.empty()) fail(ErrorCode::invalid_input, "feature subset is empty");
    for (auto f : features) {
        if (f >= data.features()) {
            fail(ErrorCode::invalid_input, "feature " + std::to_string(f) + " out of range");
        }
    }
}

// Scales `x` in place using the per-column extremes of the rows in `fit_rows`.
void scale_by(Matrix& x, std::span<const std::size_t> fit_rows) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (auto r : fit_rows) {
            lo = std::min(lo, x(r, c));
            hi = std::max(hi, x(r, c));
        }
        const double span = hi - lo;
        for (std::size_t r = 0; r < x.rows(); ++r) {
            x(r, c) = span > 0.0 ? (x(r, c) - lo) / span : 0.0;
        }
    }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

double knn_cv_accuracy(const Dataset& data, std::span<const FeatureIndex> features,
                       const EvaluatorConfig& cfg) {
    cfg.validate();
    check_subset(data, features);
    if (data.rows() < 2) fail(ErrorCode::invalid_input, "cross-validation needs at least 2 rows");

    const auto labels = data.y();
    const int folds = effective_folds(labels, cfg.folds);
    const auto fold_of = stratified_folds(labels, folds, cfg.seed);
    const Matrix selected = data.x().select_columns(features);
    const auto num_classes = static_cast<std::size_t>(data.num_classes());

    double accuracy_sum = 0.0;
    int evaluated_folds = 0;
    std::vector<std::pair<double, std::size_t>> neighbours;
    std::vector<std::size_t> votes(num_classes);

    for (int fold = 0; fold < folds; ++fold) {
        std::vector<std::size_t> train, test;
        for (std::size_t r = 0; r < data.rows(); ++r) {
            (fold_of[r] == fold ? test : train).push_back(r);
        }
        if (test.empty() || train.empty()) continue;

        Matrix x = selected;
        scale_by(x, train);
        const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(cfg.knn_k), train.size());

        std::size_t correct = 0;
        for (auto t : test) {
            neighbours.clear();
            for (auto r : train) neighbours.emplace_back(squared_distance(x.row(t), x.row(r)), r);
            std::partial_sort(neighbours.begin(), neighbours.begin() + static_cast<std::ptrdiff_t>(k),
                              neighbours.end());
            std::fill(votes.begin(), votes.end(), 0);
            std::size_t best_votes = 0;
            for (std::size_t i = 0; i < k; ++i) {
                const auto cls = static_cast<std::size_t>(labels[neighbours[i].second]);
                best_votes = std::max(best_votes, ++votes[cls]);
            }
            int predicted = 0;
            for (std::size_t i = 0; i < k; ++i) {
                const int cls = labels[neighbours[i].second];
                if (votes[static_cast<std::size_t>(cls)] == best_votes) {
                    predicted = cls;
                    break;
                }
            }
            if (predicted == labels[t]) ++correct;
        }
        accuracy_sum += static_cast<double>(correct) / static_cast<double>(test.size());
        ++evaluated_folds;
    }
    return accuracy_sum / static_cast<double>(evaluated_folds);
}

}  // namespace fsdem
