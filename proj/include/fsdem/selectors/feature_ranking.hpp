#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsdem/core/types.hpp"

namespace fsdem {

/// Best-first permutation of feature indices; its k-prefix is the selected subset.
class FeatureRanking {
public:
    /// Throws invalid-input unless order is a permutation of 0..d-1.
    static FeatureRanking from_order(std::vector<FeatureIndex> order);

    /// Orders features by descending score, ties by ascending index. The stored
    /// scores run parallel to the order.
    static FeatureRanking from_scores(std::span<const double> per_feature_scores);

    std::span<const FeatureIndex> order() const noexcept { return order_; }
    std::optional<std::span<const double>> scores() const;
    std::size_t size() const noexcept { return order_.size(); }

    /// First k features. Throws invalid-input when k > size().
    FeatureSubset prefix(std::size_t k) const;

    std::span<const std::string> warnings() const noexcept { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

    friend bool operator==(const FeatureRanking&, const FeatureRanking&) = default;

private:
    std::vector<FeatureIndex> order_;
    std::vector<double> scores_;
    std::vector<std::string> warnings_;
};

}  // namespace fsdem
