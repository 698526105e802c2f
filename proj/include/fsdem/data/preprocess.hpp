#pragma once

#include <cstdint>

#include "fsdem/data/dataset.hpp"

namespace fsdem {

struct NoiseSpec {
    /// Noise standard deviation as a fraction of each column's standard deviation.
    double level = 0.0;
    std::uint64_t seed = 0;
};

/// Maps every column affinely onto [0, 1]; constant columns become 0.
Matrix minmax_normalize(const Matrix& x);
Dataset minmax_normalize(const Dataset& data);

/// Sample standard deviation (n - 1); 0 for a single row.
double column_stddev(const Matrix& x, std::size_t column);

/// Adds N(0, (level * sd_j)^2) to every cell of column j. Labels are untouched
/// and the result is fully determined by the seed. Throws invalid-input on a
/// negative level.
Dataset inject_noise(const Dataset& data, const NoiseSpec& spec);

}  // namespace fsdem
