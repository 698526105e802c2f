#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "fsdem/data/dataset.hpp"
#include "fsdem/data/preprocess.hpp"
#include "fsdem/selectors/selector.hpp"

namespace fsdem {

struct StabilityResult {
    double nogueira = 0.0;
    double kuncheva = 0.0;
};

/// Base seed of repeat r. The default derives it from (selector.seed, r).
using RepeatSeeder = std::function<std::uint64_t(std::size_t repeat)>;

/// Ranks `repeats` noisy copies of the data and compares their k-prefixes
/// with the variance-based and the consistency-based stability indices. Each
/// repeat perturbs the data and seeds the selector from its own base seed.
/// Throws invalid-input when repeats < 2 or k is outside [1, d).
StabilityResult run_stability_study(const Dataset& data, const SelectorConfig& selector,
                                    std::size_t repeats, const NoiseSpec& noise, std::size_t k,
                                    const RepeatSeeder& seeder = {});

}  // namespace fsdem
