#pragma once

#include <span>
#include <vector>

namespace fsdem {

/// Closed interval a measure takes values in. Accuracy-like measures use [0,1].
struct MeasureBounds {
    double lower = 0.0;
    double upper = 1.0;

    bool contains(double v) const noexcept { return v >= lower && v <= upper; }
};

/// One observation M(k): the measure value with k features selected.
struct CurvePoint {
    int k = 0;
    double value = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Piecewise-linear curve through observations sorted by k.
///
/// Immutable after construction; only build_curve creates one, so every
/// instance has at least two points, strictly increasing positive k, and
/// values inside its bounds.
class ObservationCurve {
public:
    std::span<const CurvePoint> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    int first_k() const noexcept { return points_.front().k; }
    int last_k() const noexcept { return points_.back().k; }
    const MeasureBounds& bounds() const noexcept { return bounds_; }
    double min_value() const noexcept;
    double max_value() const noexcept;

    /// Linear interpolant at x. Throws invalid-range outside [first_k, last_k].
    double at(double x) const;

    friend ObservationCurve build_curve(std::vector<CurvePoint> observations,
                                        MeasureBounds bounds);

private:
    ObservationCurve(std::vector<CurvePoint> points, MeasureBounds bounds)
        : points_(std::move(points)), bounds_(bounds) {}

    std::vector<CurvePoint> points_;
    MeasureBounds bounds_;
};

/// Sorts observations by k and validates them.
/// Throws invalid-input on fewer than two points, duplicate or non-positive k,
/// or a value outside the bounds.
ObservationCurve build_curve(std::vector<CurvePoint> observations, MeasureBounds bounds = {});

/// Integration bounds [a, b] over the number of selected features.
class MetricRange {
public:
    /// Throws invalid-range unless 1 <= a < b.
    MetricRange(int a, int b);

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int width() const noexcept { return b_ - a_; }

    /// Throws invalid-range if the range is not inside the curve's support.
    void check_within(const ObservationCurve& curve) const;

    friend bool operator==(const MetricRange&, const MetricRange&) = default;

private:
    int a_;
    int b_;
};

}  // namespace fsdem
