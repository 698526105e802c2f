#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fsdem/data/dataset.hpp"
#include "fsdem/evaluators/evaluator_config.hpp"
#include "fsdem/selectors/feature_ranking.hpp"
#include "fsdem/selectors/forest.hpp"

namespace fsdem {

enum class SelectorId { random, info_gain, chi2, forest, sfs };

std::string_view to_string(SelectorId id);
/// Accepts the CLI identifiers random, info_gain, chi2, forest and sfs.
SelectorId parse_selector(std::string_view id);

struct SelectorConfig {
    SelectorId id = SelectorId::random;
    std::uint64_t seed = 0;
    int bins = 10;
    ForestConfig forest;
    /// Measure driving sequential forward selection.
    Measure sfs_evaluator = Measure::accuracy;
    /// Number of greedy steps; nullopt ranks every feature greedily.
    std::optional<int> sfs_steps;

    /// Throws invalid-input when bins < 2 or the forest settings are invalid.
    void validate() const;
};

/// Runs the configured selector. Deterministic given (data, cfg).
FeatureRanking rank_features(const Dataset& data, const SelectorConfig& cfg);

}  // namespace fsdem
