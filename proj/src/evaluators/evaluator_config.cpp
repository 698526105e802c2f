#include "fsdem/evaluators/evaluator_config.hpp"

#include "fsdem/core/error.hpp"

namespace fsdem {

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::accuracy: return "accuracy";
        case Measure::clacc: return "clacc";
    }
    return "unknown";
}

Measure parse_measure(std::string_view id) {
    if (id == "accuracy") return Measure::accuracy;
    if (id == "clacc") return Measure::clacc;
    fail(ErrorCode::invalid_input, "unknown measure '" + std::string(id) + "'");
}

void EvaluatorConfig::validate() const {
    if (folds < 2) fail(ErrorCode::invalid_input, "folds must be >= 2");
    if (knn_k < 1) fail(ErrorCode::invalid_input, "knn_k must be >= 1");
    if (kmeans.restarts < 1) fail(ErrorCode::invalid_input, "kmeans restarts must be >= 1");
    if (kmeans.max_iter < 1) fail(ErrorCode::invalid_input, "kmeans max_iter must be >= 1");
    if (kmeans.clusters && *kmeans.clusters < 1) {
        fail(ErrorCode::invalid_input, "kmeans clusters must be >= 1");
    }
    if (!(kmeans.tol >= 0.0)) fail(ErrorCode::invalid_input, "kmeans tol must be >= 0");
}

}  // namespace fsdem
