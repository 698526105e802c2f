#pragma once

#include <cstddef>
#include <vector>

namespace fsdem {

using FeatureIndex = std::size_t;
using FeatureSubset = std::vector<FeatureIndex>;

}  // namespace fsdem
