#include "fsdem/data/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fsdem/core/error.hpp"

namespace fsdem {

Matrix minmax_normalize(const Matrix& x) {
    Matrix out(x.rows(), x.cols());
    for (std::size_t c = 0; c < x.cols(); ++c) {
        double lo = x(0, c);
        double hi = x(0, c);
        for (std::size_t r = 1; r < x.rows(); ++r) {
            lo = std::min(lo, x(r, c));
            hi = std::max(hi, x(r, c));
        }
        const double span = hi - lo;
        for (std::size_t r = 0; r < x.rows(); ++r) {
            out(r, c) = span > 0.0 ? (x(r, c) - lo) / span : 0.0;
        }
    }
    return out;
}

Dataset minmax_normalize(const Dataset& data) { return data.with_features(minmax_normalize(data.x())); }

double column_stddev(const Matrix& x, std::size_t column) {
    const std::size_t n = x.rows();
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += x(r, column);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const double dev = x(r, column) - mean;
        ss += dev * dev;
    }
    return std::sqrt(ss / static_cast<double>(n - 1));
}

Dataset inject_noise(const Dataset& data, const NoiseSpec& spec) {
    if (!(spec.level >= 0.0) || !std::isfinite(spec.level)) {
        fail(ErrorCode::invalid_input, "noise level must be a finite nonnegative number");
    }
    if (spec.level == 0.0) return data;

    Matrix x = data.x();
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t c = 0; c < x.cols(); ++c) {
        const double sigma = spec.level * column_stddev(data.x(), c);
        for (std::size_t r = 0; r < x.rows(); ++r) x(r, c) += sigma * gauss(rng);
    }
    return data.with_features(std::move(x));
}

}  // namespace fsdem
