#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fsdem {

/// Fold index per row. Rows of each class are shuffled and dealt round-robin,
/// continuing where the previous class stopped, so class counts per fold
/// differ by at most one. Throws invalid-input when folds < 2 or folds > n.
std::vector<int> stratified_folds(std::span<const int> labels, int folds, std::uint64_t seed);

/// Requested fold count clamped to the smallest class size (and never below 2).
int effective_folds(std::span<const int> labels, int requested);

}  // namespace fsdem
