#pragma once

#include <span>
#include <vector>

#include "fsdem/core/observation_curve.hpp"

namespace fsdem {

/// First-order derivative estimate at an integer number of features.
struct Slope {
    int x = 0;
    double slope = 0.0;

    friend bool operator==(const Slope&, const Slope&) = default;
};

/// Integral of the piecewise-linear curve over [a, b] by the trapezoidal rule.
/// Nodes inside the range are used as-is; endpoints falling between nodes are
/// interpolated. Exact for the linear interpolant.
double trapezoid_integral(const ObservationCurve& curve, const MetricRange& range);

/// Normalized area under the curve: integral / (b - a). Inherits the measure's bounds.
double fsdem_score(const ObservationCurve& curve, const MetricRange& range);

/// g'(x) at every integer x in [a, b], evaluated on the interpolated curve:
/// forward difference at a, backward difference at b, central in between.
std::vector<Slope> finite_differences(const ObservationCurve& curve, const MetricRange& range);

/// Mean of finite_differences over the (b - a) + 1 grid points. Positive when
/// adding features tends to improve the measure.
double stability_score(const ObservationCurve& curve, const MetricRange& range);

/// Keeps every stride-th k, always retaining the first and the last element.
std::vector<int> subsample_observations(std::span<const int> ks, int stride);

}  // namespace fsdem
