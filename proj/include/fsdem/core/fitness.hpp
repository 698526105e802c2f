#pragma once

#include <cstddef>

#include "fsdem/core/observation_curve.hpp"

namespace fsdem {

/// Weights of the performance term (k_c) and the size penalty (k_p).
class FitnessWeights {
public:
    /// Throws invalid-input on negative weights or k_c + k_p == 0.
    FitnessWeights(double k_c = 0.9, double k_p = 0.1);

    double k_c() const noexcept { return k_c_; }
    double k_p() const noexcept { return k_p_; }

private:
    double k_c_;
    double k_p_;
};

/// Normalized exponential size penalty (e^rho - 1) / (e - 1) for rho in [0, 1].
double size_penalty(double rho);

/// k_c * measure - k_p * size_penalty(selected / d).
double fitness(double measure_value, std::size_t selected_count, std::size_t d,
               const FitnessWeights& weights, MeasureBounds bounds = {});

/// Baseline fitness improvement: positive when selection beats the full feature set.
inline double bfi(double fitness_selected, double fitness_baseline) {
    return fitness_selected - fitness_baseline;
}

}  // namespace fsdem
