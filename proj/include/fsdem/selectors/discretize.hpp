#pragma once

#include <span>
#include <vector>

namespace fsdem {

/// Equal-width bin index in [0, bins) for every value; the maximum falls in
/// the last bin and a constant column maps entirely to bin 0.
std::vector<int> equal_width_bins(std::span<const double> values, int bins);

}  // namespace fsdem
