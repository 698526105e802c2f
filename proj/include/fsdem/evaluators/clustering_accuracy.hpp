#pragma once

#include <span>

namespace fsdem {

/// Fraction of points whose cluster, after the count-maximizing one-to-one
/// mapping of cluster ids onto class ids, matches the class. The mapping is
/// solved by hungarian_assignment on the negated coincidence counts,
/// zero-padded to square. Ids may be any integers.
/// Throws invalid-input on length mismatch or empty input.
double clustering_accuracy(std::span<const int> predicted, std::span<const int> truth);

}  // namespace fsdem
