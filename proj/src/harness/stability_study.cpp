#include "fsdem/harness/stability_study.hpp"

#include <string>
#include <vector>

#include "fsdem/core/error.hpp"
#include "fsdem/core/seed.hpp"
#include "fsdem/core/selection_stability.hpp"

namespace fsdem {

StabilityResult run_stability_study(const Dataset& data, const SelectorConfig& selector,
                                    std::size_t repeats, const NoiseSpec& noise, std::size_t k,
                                    const RepeatSeeder& seeder) {
    if (repeats < 2) fail(ErrorCode::invalid_input, "stability study needs at least 2 repeats");
    if (k < 1 || k >= data.features()) {
        fail(ErrorCode::invalid_input, "stability study needs 1 <= k < d, got k=" + std::to_string(k));
    }

    std::vector<FeatureSubset> prefixes;
    std::vector<FeatureSubset> rankings;
    for (std::size_t r = 0; r < repeats; ++r) {
        const std::uint64_t base = seeder ? seeder(r) : derive_seed(selector.seed, r);
        const Dataset noisy = inject_noise(data, {noise.level, derive_seed(base ^ noise.seed, 1)});
        SelectorConfig cfg = selector;
        cfg.seed = derive_seed(base, 0);
        const auto ranking = rank_features(noisy, cfg);
        prefixes.push_back(ranking.prefix(k));
        rankings.emplace_back(ranking.order().begin(), ranking.order().end());
    }

    StabilityResult result;
    result.nogueira = nogueira_stability(SelectionMatrix::from_subsets(prefixes, data.features()));
    result.kuncheva = kuncheva_stability(RankedSubsetFamily(std::move(rankings), data.features()), k);
    return result;
}

}  // namespace fsdem
