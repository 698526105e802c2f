#pragma once

#include <string>

#include "fsdem/core/observation_curve.hpp"

namespace fsdem {

/// The two curve properties of one selector on one dataset under one measure.
struct MetricReport {
    double fsdem = 0.0;
    double stability = 0.0;
    MetricRange range{1, 2};
    std::string measure_id;
    std::string selector_id;
    std::string dataset_id;
    int observation_count = 0;
};

/// Computes fsdem_score and stability_score over the range. observation_count
/// counts the curve nodes inside [a, b].
MetricReport make_metric_report(const ObservationCurve& curve, const MetricRange& range,
                                std::string measure_id, std::string selector_id,
                                std::string dataset_id);

}  // namespace fsdem
