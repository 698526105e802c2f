#include "fsdem/harness/sweep.hpp"

#include <chrono>
#include <numeric>
#include <string>

#include "fsdem/core/curve_metrics.hpp"
#include "fsdem/core/error.hpp"
#include "fsdem/core/seed.hpp"
#include "fsdem/data/folds.hpp"
#include "fsdem/evaluators/measure_curve.hpp"
#include "fsdem/harness/benchmark_config.hpp"
#include "fsdem/harness/seeding.hpp"

namespace fsdem {

namespace {

std::string fingerprint(const Dataset& data, const SweepRequest& req, const MetricRange& range) {
    nlohmann::ordered_json j;
    j["dataset_id"] = data.id();
    j["rows"] = data.rows();
    j["features"] = data.features();
    j["selector"] = to_json(req.selector);
    j["evaluator"] = to_json(req.evaluator);
    j["range"] = {range.a(), range.b()};
    j["stride"] = req.stride;
    j["k_c"] = req.weights.k_c();
    j["k_p"] = req.weights.k_p();
    j["seed"] = req.seed;
    j["version"] = version();
    return to_hex(stable_hash(j.dump()));
}

}  // namespace

RunReport run_sweep(const Dataset& data, const SweepRequest& request) {
    const auto started = std::chrono::steady_clock::now();
    const auto d = static_cast<int>(data.features());
    const MetricRange range = request.range.value_or(MetricRange(1, d));
    if (range.b() > d) {
        fail(ErrorCode::invalid_range, "range [" + std::to_string(range.a()) + ", " +
                                           std::to_string(range.b()) + "] exceeds d=" +
                                           std::to_string(d) + " of dataset " + data.id());
    }

    SelectorConfig selector = request.selector;
    selector.seed = derive_seed(request.seed, 0);
    EvaluatorConfig evaluator = request.evaluator;
    evaluator.seed = derive_seed(request.seed, 1);
    const std::string selector_id(to_string(selector.id));
    const std::string measure_id(to_string(evaluator.measure));

    const auto context = [&](const std::string& where) {
        return "dataset " + data.id() + ", selector " + selector_id + ", " + where;
    };

    FeatureRanking ranking = [&] {
        try {
            return rank_features(data, selector);
        } catch (const Error& e) {
            throw Error(e.code(), context("ranking") + ": " + e.what());
        }
    }();

    std::vector<int> grid(static_cast<std::size_t>(range.width()) + 1);
    std::iota(grid.begin(), grid.end(), range.a());
    const auto ks = subsample_observations(grid, request.stride);

    const auto order = ranking.order();
    const auto measure_at = [&](int k) {
        try {
            return evaluate_measure(data, order.first(static_cast<std::size_t>(k)), evaluator);
        } catch (const Error& e) {
            throw Error(e.code(), context("k=" + std::to_string(k)) + ": " + e.what());
        }
    };

    std::vector<CurvePoint> points;
    for (int k : ks) points.push_back({k, measure_at(k)});
    const auto curve = build_curve(points);

    RunReport report;
    report.metric = make_metric_report(curve, range, measure_id, selector_id, data.id());
    report.stride = request.stride;
    report.curve = points;
    report.derivative = finite_differences(curve, range);
    report.seed = request.seed;
    report.fingerprint = fingerprint(data, request, range);
    report.warnings.assign(ranking.warnings().begin(), ranking.warnings().end());
    if (evaluator.measure == Measure::accuracy) {
        report.folds_used = effective_folds(data.y(), evaluator.folds);
        if (report.folds_used != evaluator.folds) {
            report.warnings.push_back("folds reduced from " + std::to_string(evaluator.folds) +
                                      " to " + std::to_string(report.folds_used) +
                                      " by the smallest class");
        }
    }

    const CurvePoint* best = &points.front();
    for (const auto& p : points) {
        if (p.value > best->value) best = &p;
    }
    const double full = points.back().k == d ? points.back().value : measure_at(d);
    const auto du = static_cast<std::size_t>(d);
    report.bfi.k_best = best->k;
    report.bfi.k_c = request.weights.k_c();
    report.bfi.k_p = request.weights.k_p();
    report.bfi.value = bfi(fitness(best->value, static_cast<std::size_t>(best->k), du, request.weights),
                           fitness(full, du, du, request.weights));

    if (request.record_wall_time) {
        report.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    return report;
}

}  // namespace fsdem
