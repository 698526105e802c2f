#pragma once

#include <cstdint>
#include <optional>

#include "fsdem/core/fitness.hpp"
#include "fsdem/core/observation_curve.hpp"
#include "fsdem/data/dataset.hpp"
#include "fsdem/evaluators/evaluator_config.hpp"
#include "fsdem/harness/run_report.hpp"
#include "fsdem/selectors/selector.hpp"

namespace fsdem {

struct SweepRequest {
    SelectorConfig selector;
    EvaluatorConfig evaluator;
    /// nullopt means [1, d].
    std::optional<MetricRange> range;
    int stride = 1;
    FitnessWeights weights;
    /// Overrides the selector and evaluator seeds with children of this seed.
    std::uint64_t seed = 0;
    bool record_wall_time = false;
};

/// Ranks once, measures the curve on subsample_observations([a..b], stride),
/// and reports FSDEM, stability, the derivative grid and BFI (best observed
/// k against the full feature set). Evaluation failures are rethrown with
/// the dataset, selector and k in the message.
RunReport run_sweep(const Dataset& data, const SweepRequest& request);

}  // namespace fsdem
