#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fsdem {

enum class Measure { accuracy, clacc };

std::string_view to_string(Measure m);
/// Throws invalid-input for anything other than "accuracy" or "clacc".
Measure parse_measure(std::string_view id);

struct KMeansConfig {
    /// nullopt: one cluster per class.
    std::optional<int> clusters;
    int restarts = 10;
    int max_iter = 300;
    double tol = 1e-4;
};

struct EvaluatorConfig {
    Measure measure = Measure::accuracy;
    int knn_k = 5;
    int folds = 5;
    KMeansConfig kmeans;
    std::uint64_t seed = 0;

    /// Throws invalid-input when folds < 2, knn_k < 1, restarts < 1 or max_iter < 1.
    void validate() const;
};

}  // namespace fsdem
