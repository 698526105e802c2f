#include "fsdem/selectors/selector.hpp"

#include <algorithm>
#include <string>

#include "fsdem/core/error.hpp"
#include "fsdem/selectors/filters.hpp"
#include "fsdem/selectors/random_ranking.hpp"
#include "fsdem/selectors/sfs.hpp"

namespace fsdem {

std::string_view to_string(SelectorId id) {
    switch (id) {
        case SelectorId::random: return "random";
        case SelectorId::info_gain: return "info_gain";
        case SelectorId::chi2: return "chi2";
        case SelectorId::forest: return "forest";
        case SelectorId::sfs: return "sfs";
    }
    return "unknown";
}

SelectorId parse_selector(std::string_view id) {
    for (auto s : {SelectorId::random, SelectorId::info_gain, SelectorId::chi2, SelectorId::forest,
                   SelectorId::sfs}) {
        if (to_string(s) == id) return s;
    }
    fail(ErrorCode::invalid_input, "unknown selector '" + std::string(id) + "'");
}

void SelectorConfig::validate() const {
    if (bins < 2) fail(ErrorCode::invalid_input, "bins must be >= 2");
    forest.validate();
    if (sfs_steps && *sfs_steps < 1) fail(ErrorCode::invalid_input, "sfs_steps must be >= 1");
}

FeatureRanking rank_features(const Dataset& data, const SelectorConfig& cfg) {
    cfg.validate();
    switch (cfg.id) {
        case SelectorId::random:
            return random_ranking(data.features(), cfg.seed);
        case SelectorId::info_gain:
            return info_gain_ranking(data, cfg.bins);
        case SelectorId::chi2:
            return chi2_ranking(data, cfg.bins);
        case SelectorId::forest:
            return forest_importance_ranking(data, cfg.forest, cfg.seed);
        case SelectorId::sfs: {
            EvaluatorConfig evaluator;
            evaluator.measure = cfg.sfs_evaluator;
            const auto steps = std::min<std::size_t>(
                data.features(), cfg.sfs_steps ? static_cast<std::size_t>(*cfg.sfs_steps)
                                               : data.features());
            return sequential_forward_selection(data, evaluator, steps, cfg.seed);
        }
    }
    fail(ErrorCode::invalid_input, "unknown selector");
}

}  // namespace fsdem
