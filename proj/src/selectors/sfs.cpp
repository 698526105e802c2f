#include "fsdem/selectors/sfs.hpp"

#include <string>
#include <vector>

#include "fsdem/core/error.hpp"
#include "fsdem/evaluators/measure_curve.hpp"

namespace fsdem {

FeatureRanking sequential_forward_selection(const Dataset& data, const EvaluatorConfig& evaluator,
                                            std::size_t k, std::uint64_t seed) {
    const std::size_t d = data.features();
    if (k < 1 || k > d) {
        fail(ErrorCode::invalid_input, "sfs needs 1 <= k <= " + std::to_string(d));
    }
    EvaluatorConfig cfg = evaluator;
    cfg.seed = seed;

    std::vector<bool> chosen(d, false);
    FeatureSubset order;
    while (order.size() < k) {
        std::size_t best = d;
        double best_score = 0.0;
        FeatureSubset trial = order;
        trial.push_back(0);
        for (std::size_t f = 0; f < d; ++f) {
            if (chosen[f]) continue;
            trial.back() = f;
            const double score = evaluate_measure(data, trial, cfg);
            if (best == d || score > best_score) {
                best = f;
                best_score = score;
            }
        }
        chosen[best] = true;
        order.push_back(best);
    }
    for (std::size_t f = 0; f < d; ++f) {
        if (!chosen[f]) order.push_back(f);
    }
    return FeatureRanking::from_order(std::move(order));
}

}  // namespace fsdem
