#include "fsdem/core/observation_curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsdem/core/error.hpp"

namespace fsdem {

ObservationCurve build_curve(std::vector<CurvePoint> observations, MeasureBounds bounds) {
    if (!(bounds.lower < bounds.upper)) {
        fail(ErrorCode::invalid_input, "measure bounds must satisfy lower < upper");
    }
    if (observations.size() < 2) {
        fail(ErrorCode::invalid_input, "a curve needs at least 2 observations, got " +
                                           std::to_string(observations.size()));
    }
    std::sort(observations.begin(), observations.end(),
              [](const CurvePoint& l, const CurvePoint& r) { return l.k < r.k; });
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const auto& p = observations[i];
        if (p.k < 1) fail(ErrorCode::invalid_input, "k must be positive, got " + std::to_string(p.k));
        if (i > 0 && observations[i - 1].k == p.k) {
            fail(ErrorCode::invalid_input, "duplicate observation for k=" + std::to_string(p.k));
        }
        if (!std::isfinite(p.value) || !bounds.contains(p.value)) {
            fail(ErrorCode::invalid_input, "value at k=" + std::to_string(p.k) +
                                               " lies outside the measure bounds");
        }
    }
    return ObservationCurve(std::move(observations), bounds);
}

double ObservationCurve::min_value() const noexcept {
    return std::min_element(points_.begin(), points_.end(),
                            [](const auto& l, const auto& r) { return l.value < r.value; })
        ->value;
}

double ObservationCurve::max_value() const noexcept {
    return std::max_element(points_.begin(), points_.end(),
                            [](const auto& l, const auto& r) { return l.value < r.value; })
        ->value;
}

double ObservationCurve::at(double x) const {
    if (!(x >= first_k() && x <= last_k())) {
        fail(ErrorCode::invalid_range, "x=" + std::to_string(x) + " outside curve support [" +
                                           std::to_string(first_k()) + ", " +
                                           std::to_string(last_k()) + "]");
    }
    // First node with k >= x.
    auto hi = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const CurvePoint& p, double v) { return p.k < v; });
    if (hi->k == x) return hi->value;
    auto lo = std::prev(hi);
    const double t = (x - lo->k) / static_cast<double>(hi->k - lo->k);
    return lo->value + t * (hi->value - lo->value);
}

MetricRange::MetricRange(int a, int b) : a_(a), b_(b) {
    if (a < 1 || a >= b) {
        fail(ErrorCode::invalid_range,
             "range [" + std::to_string(a) + ", " + std::to_string(b) + "] requires 1 <= a < b");
    }
}

void MetricRange::check_within(const ObservationCurve& curve) const {
    if (a_ < curve.first_k() || b_ > curve.last_k()) {
        fail(ErrorCode::invalid_range,
             "range [" + std::to_string(a_) + ", " + std::to_string(b_) +
                 "] exceeds curve support [" + std::to_string(curve.first_k()) + ", " +
                 std::to_string(curve.last_k()) + "]");
    }
}

}  // namespace fsdem
