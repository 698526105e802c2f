#include "fsdem/evaluators/measure_curve.hpp"

#include <string>
#include <vector>

#include "fsdem/core/error.hpp"
#include "fsdem/evaluators/clustering_accuracy.hpp"
#include "fsdem/evaluators/kmeans.hpp"
#include "fsdem/evaluators/knn.hpp"

namespace fsdem {

double evaluate_measure(const Dataset& data, std::span<const FeatureIndex> features,
                        const EvaluatorConfig& cfg) {
    switch (cfg.measure) {
        case Measure::accuracy:
            return knn_cv_accuracy(data, features, cfg);
        case Measure::clacc: {
            const int clusters = cfg.kmeans.clusters.value_or(data.num_classes());
            const auto labels = kmeans_cluster(data, features, clusters, cfg);
            return clustering_accuracy(labels, data.y());
        }
    }
    fail(ErrorCode::invalid_input, "unknown measure");
}

ObservationCurve measure_curve(const Dataset& data, std::span<const FeatureIndex> ranking,
                               const EvaluatorConfig& cfg, std::span<const int> ks) {
    std::vector<CurvePoint> points;
    points.reserve(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const int k = ks[i];
        if (k < 1 || static_cast<std::size_t>(k) > ranking.size()) {
            fail(ErrorCode::invalid_input, "k=" + std::to_string(k) + " outside [1, " +
                                               std::to_string(ranking.size()) + "]");
        }
        if (i > 0 && ks[i - 1] >= k) fail(ErrorCode::invalid_input, "ks must be strictly increasing");
        points.push_back({k, evaluate_measure(data, ranking.first(static_cast<std::size_t>(k)), cfg)});
    }
    return build_curve(std::move(points));
}

}  // namespace fsdem
