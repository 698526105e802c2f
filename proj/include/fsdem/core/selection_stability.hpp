#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fsdem/core/types.hpp"

namespace fsdem {

/// K runs x d binary indicators; row r marks the features selected in run r.
class SelectionMatrix {
public:
    /// Throws invalid-input unless K >= 2, all rows have length d >= 1 and
    /// every row selects at least one feature.
    explicit SelectionMatrix(std::vector<std::vector<std::uint8_t>> rows);

    /// Builds the indicator matrix from per-run subsets of [0, d).
    static SelectionMatrix from_subsets(std::span<const FeatureSubset> subsets, std::size_t d);

    std::size_t runs() const noexcept { return rows_.size(); }
    std::size_t features() const noexcept { return d_; }
    std::span<const std::vector<std::uint8_t>> rows() const noexcept { return rows_; }

private:
    std::vector<std::vector<std::uint8_t>> rows_;
    std::size_t d_ = 0;
};

/// Feature sequences S_1..S_K from K runs (rankings or fixed-size subsets).
class RankedSubsetFamily {
public:
    /// Throws invalid-input unless K >= 2 and every sequence holds distinct
    /// indices in [0, d).
    RankedSubsetFamily(std::vector<FeatureSubset> sequences, std::size_t d);

    std::size_t runs() const noexcept { return sequences_.size(); }
    std::size_t features() const noexcept { return d_; }
    std::span<const FeatureSubset> sequences() const noexcept { return sequences_; }

private:
    std::vector<FeatureSubset> sequences_;
    std::size_t d_;
};

/// Variance-based selection stability: 1 - mean(s_f^2) / (kbar/d * (1 - kbar/d)),
/// with s_f^2 the unbiased (K - 1) variance of column f and kbar the mean
/// number of selected features. Throws degenerate-selection when the
/// denominator vanishes.
double nogueira_stability(const SelectionMatrix& selections);

/// Kuncheva's consistency index (r*d - k^2) / (k*(d - k)), r = |s1 & s2|.
/// Throws undefined-index unless 0 < k < d, invalid-input on size mismatch.
double consistency_index(std::span<const FeatureIndex> s1, std::span<const FeatureIndex> s2,
                         std::size_t d);

/// Mean consistency index over all unordered pairs of the k-prefixes.
double kuncheva_stability(const RankedSubsetFamily& family, std::size_t k);

}  // namespace fsdem
