#include "fsdem/selectors/discretize.hpp"

#include <algorithm>
#include <cmath>

#include "fsdem/core/error.hpp"

namespace fsdem {

std::vector<int> equal_width_bins(std::span<const double> values, int bins) {
    if (bins < 2) fail(ErrorCode::invalid_input, "need at least 2 bins");
    std::vector<int> out(values.size(), 0);
    if (values.empty()) return out;
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double span = *hi_it - lo;
    if (!(span > 0.0)) return out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double pos = (values[i] - lo) / span * bins;
        // Snap onto bin edges so that affinely transformed columns, which differ
        // only by rounding here, land in the same bins.
        const double edge = std::round(pos);
        if (std::abs(pos - edge) <= 1e-9 * bins) pos = edge;
        out[i] = std::clamp(static_cast<int>(std::floor(pos)), 0, bins - 1);
    }
    return out;
}

}  // namespace fsdem
