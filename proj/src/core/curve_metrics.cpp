#include "fsdem/core/curve_metrics.hpp"

#include <string>

#include "fsdem/core/error.hpp"

namespace fsdem {

double trapezoid_integral(const ObservationCurve& curve, const MetricRange& range) {
    range.check_within(curve);
    const double a = range.a();
    const double b = range.b();

    double area = 0.0;
    double prev_x = a;
    double prev_y = curve.at(a);
    for (const auto& p : curve.points()) {
        if (p.k <= a) continue;
        if (p.k >= b) break;
        area += 0.5 * (p.k - prev_x) * (prev_y + p.value);
        prev_x = p.k;
        prev_y = p.value;
    }
    area += 0.5 * (b - prev_x) * (prev_y + curve.at(b));
    return area;
}

double fsdem_score(const ObservationCurve& curve, const MetricRange& range) {
    return trapezoid_integral(curve, range) / range.width();
}

std::vector<Slope> finite_differences(const ObservationCurve& curve, const MetricRange& range) {
    range.check_within(curve);
    std::vector<Slope> out;
    out.reserve(static_cast<std::size_t>(range.width()) + 1);
    for (int x = range.a(); x <= range.b(); ++x) {
        double slope;
        if (x == range.a()) {
            slope = curve.at(x + 1) - curve.at(x);
        } else if (x == range.b()) {
            slope = curve.at(x) - curve.at(x - 1);
        } else {
            slope = (curve.at(x + 1) - curve.at(x - 1)) / 2.0;
        }
        out.push_back({x, slope});
    }
    return out;
}

double stability_score(const ObservationCurve& curve, const MetricRange& range) {
    const auto slopes = finite_differences(curve, range);
    double sum = 0.0;
    for (const auto& s : slopes) sum += s.slope;
    return sum / static_cast<double>(range.width() + 1);
}

std::vector<int> subsample_observations(std::span<const int> ks, int stride) {
    if (ks.empty()) fail(ErrorCode::invalid_input, "cannot subsample an empty k sequence");
    if (stride < 1) {
        fail(ErrorCode::invalid_input, "stride must be >= 1, got " + std::to_string(stride));
    }
    std::vector<int> out;
    const auto step = static_cast<std::size_t>(stride);
    std::size_t i = 0;
    for (; i < ks.size(); i += step) out.push_back(ks[i]);
    if (i - step != ks.size() - 1) out.push_back(ks.back());
    return out;
}

}  // namespace fsdem
