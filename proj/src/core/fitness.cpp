#include "fsdem/core/fitness.hpp"

#include <cmath>
#include <string>

#include "fsdem/core/error.hpp"

namespace fsdem {

FitnessWeights::FitnessWeights(double k_c, double k_p) : k_c_(k_c), k_p_(k_p) {
    if (!(k_c >= 0.0) || !(k_p >= 0.0) || !std::isfinite(k_c) || !std::isfinite(k_p)) {
        fail(ErrorCode::invalid_input, "fitness weights must be finite and nonnegative");
    }
    if (k_c + k_p <= 0.0) fail(ErrorCode::invalid_input, "fitness weights must not both be zero");
}

double size_penalty(double rho) { return std::expm1(rho) / std::expm1(1.0); }

double fitness(double measure_value, std::size_t selected_count, std::size_t d,
               const FitnessWeights& weights, MeasureBounds bounds) {
    if (selected_count == 0 || selected_count > d) {
        fail(ErrorCode::invalid_input, "selected count " + std::to_string(selected_count) +
                                           " outside [1, " + std::to_string(d) + "]");
    }
    if (!bounds.contains(measure_value)) {
        fail(ErrorCode::invalid_input, "measure value outside its bounds");
    }
    const double rho = static_cast<double>(selected_count) / static_cast<double>(d);
    return weights.k_c() * measure_value - weights.k_p() * size_penalty(rho);
}

}  // namespace fsdem
