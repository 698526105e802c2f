#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fsdem/core/error.hpp"
#include "fsdem/core/selection_stability.hpp"
#include "fsdem/data/csv.hpp"
#include "fsdem/data/wealth.hpp"
#include "fsdem/harness/benchmark.hpp"
#include "fsdem/harness/seeding.hpp"
#include "fsdem/harness/stability_study.hpp"
#include "fsdem/harness/sweep.hpp"
#include "test_support.hpp"

namespace fsdem {
namespace {

namespace fs = std::filesystem;

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::io;
}

std::string message_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const fs::path& p) {
    std::vector<std::string> out;
    std::ifstream in(p);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

SweepRequest request(SelectorId id, std::uint64_t seed = 1) {
    SweepRequest req;
    req.selector.id = id;
    req.selector.forest.trees = 10;
    req.seed = seed;
    return req;
}

BenchmarkConfig small_config(const fs::path& out) {
    BenchmarkConfig cfg;
    DatasetSource wealth_src;
    wealth_src.id = "wealth";
    wealth_src.path = "wealth";
    wealth_src.wealth_rows = 120;
    DatasetSource iris_src;
    iris_src.id = "iris";
    iris_src.path = test::data_path("iris.csv");
    cfg.datasets = {wealth_src, iris_src};
    SelectorConfig random_sel;
    random_sel.id = SelectorId::random;
    SelectorConfig ig;
    ig.id = SelectorId::info_gain;
    cfg.selectors = {random_sel, ig};
    cfg.evaluators = {EvaluatorConfig{}};
    cfg.repeats = 3;
    cfg.output_dir = out;
    cfg.master_seed = 2024;
    return cfg;
}

// Seeding.

TEST(Seeding, StableHashIsFnv1a) {
    EXPECT_EQ(stable_hash(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(stable_hash("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(to_hex(0xabcULL), "0000000000000abc");
}

TEST(Seeding, RunSeedSeparatesEveryCoordinate) {
    const auto base = run_seed(1, "iris", "random", "accuracy", 0);
    EXPECT_EQ(base, run_seed(1, "iris", "random", "accuracy", 0));
    EXPECT_NE(base, run_seed(2, "iris", "random", "accuracy", 0));
    EXPECT_NE(base, run_seed(1, "wine", "random", "accuracy", 0));
    EXPECT_NE(base, run_seed(1, "iris", "chi2", "accuracy", 0));
    EXPECT_NE(base, run_seed(1, "iris", "random", "clacc", 0));
    EXPECT_NE(base, run_seed(1, "iris", "random", "accuracy", 1));
    // Field boundaries are length-prefixed, so shifting characters between ids matters.
    EXPECT_NE(run_seed(1, "ab", "c", "x", 0), run_seed(1, "a", "bc", "x", 0));
}

// Sweeps.

TEST(Sweep, FullRangeHasOnePointPerFeature) {
    const auto d = generate_wealth_dummy(150, 2);
    const auto r = run_sweep(d, request(SelectorId::info_gain));
    EXPECT_EQ(r.curve.size(), 6u);
    EXPECT_EQ(r.metric.observation_count, 6);
    EXPECT_EQ(r.derivative.size(), 6u);
    EXPECT_EQ(r.metric.range, MetricRange(1, 6));
    EXPECT_EQ(r.folds_used, 5);
    EXPECT_EQ(r.metric.dataset_id, "wealth");
    EXPECT_EQ(r.metric.selector_id, "info_gain");
    EXPECT_EQ(r.metric.measure_id, "accuracy");
    EXPECT_EQ(r.wall_time_ms, 0.0);
}

TEST(Sweep, StrideAndRange) {
    const auto d = load_csv(test::data_path("wine.csv"));
    auto req = request(SelectorId::chi2);
    req.stride = 2;
    req.range = MetricRange(2, 11);
    const auto r = run_sweep(d, req);
    std::vector<int> ks;
    for (const auto& p : r.curve) ks.push_back(p.k);
    EXPECT_EQ(ks, (std::vector<int>{2, 4, 6, 8, 10, 11}));
    EXPECT_EQ(r.derivative.size(), 10u);
    req.range = MetricRange(2, 14);
    EXPECT_EQ(code_of([&] { run_sweep(d, req); }), ErrorCode::invalid_range);
}

TEST(Sweep, RerunIsIdentical) {
    const auto d = generate_wealth_dummy(150, 2);
    const auto a = run_sweep(d, request(SelectorId::random, 77));
    const auto b = run_sweep(d, request(SelectorId::random, 77));
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_NE(a.fingerprint, run_sweep(d, request(SelectorId::random, 78)).fingerprint);
}

TEST(Sweep, BfiComparesBestObservedKWithAllFeatures) {
    const auto d = load_csv(test::data_path("iris.csv"));
    const auto r = run_sweep(d, request(SelectorId::info_gain));
    const CurvePoint* best = &r.curve.front();
    for (const auto& p : r.curve) {
        if (p.value > best->value) best = &p;
    }
    const FitnessWeights w;
    const double expected = fitness(best->value, static_cast<std::size_t>(best->k), 4, w) -
                            fitness(r.curve.back().value, 4, 4, w);
    EXPECT_EQ(r.bfi.k_best, best->k);
    EXPECT_NEAR(r.bfi.value, expected, 1e-15);
    EXPECT_EQ(r.bfi.k_c, 0.9);
    EXPECT_EQ(r.bfi.k_p, 0.1);
}

TEST(Sweep, FailuresNameDatasetSelectorAndK) {
    const auto d = generate_wealth_dummy(30, 2);
    auto req = request(SelectorId::chi2);
    req.evaluator.measure = Measure::clacc;
    req.evaluator.kmeans.clusters = 100;
    const auto msg = message_of([&] { run_sweep(d, req); });
    EXPECT_NE(msg.find("wealth"), std::string::npos) << msg;
    EXPECT_NE(msg.find("chi2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("k=1"), std::string::npos) << msg;
}

TEST(Sweep, ReducedFoldsAreFlagged) {
    std::vector<std::vector<double>> rows;
    std::vector<int> y;
    for (int i = 0; i < 20; ++i) {
        rows.push_back({static_cast<double>(i), static_cast<double>(i % 3)});
        y.push_back(i < 3 ? 1 : 0);
    }
    const auto r = run_sweep(test::make_dataset(rows, y), request(SelectorId::info_gain));
    EXPECT_EQ(r.folds_used, 3);
    ASSERT_FALSE(r.warnings.empty());
    EXPECT_NE(r.warnings.back().find("folds reduced"), std::string::npos);
}

// Stability studies.

TEST(StabilityStudy, ZeroNoiseDeterministicSelectorIsPerfectlyStable) {
    const auto d = generate_wealth_dummy(200, 1);
    SelectorConfig s;
    s.id = SelectorId::info_gain;
    const auto r = run_stability_study(d, s, 5, {0.0, 0}, 3);
    EXPECT_EQ(r.nogueira, 1.0);
    EXPECT_EQ(r.kuncheva, 1.0);
}

TEST(StabilityStudy, RandomSelectorIsNearZero) {
    const auto d = generate_wealth_dummy(100, 1);
    SelectorConfig s;
    s.id = SelectorId::random;
    const auto r = run_stability_study(d, s, 200, {0.1, 0}, 3);
    EXPECT_NEAR(r.nogueira, 0.0, 0.05);
    EXPECT_NEAR(r.kuncheva, 0.0, 0.05);
}

TEST(StabilityStudy, SeederControlsEachRepeat) {
    const auto d = generate_wealth_dummy(100, 1);
    SelectorConfig s;
    s.id = SelectorId::random;
    const auto seeder = [](std::size_t r) { return std::uint64_t{1000 + r}; };
    const auto a = run_stability_study(d, s, 4, {0.1, 0}, 2, seeder);
    const auto b = run_stability_study(d, s, 4, {0.1, 0}, 2, seeder);
    EXPECT_EQ(a.nogueira, b.nogueira);
    EXPECT_EQ(a.kuncheva, b.kuncheva);
}

TEST(StabilityStudy, Errors) {
    const auto d = generate_wealth_dummy(50, 1);
    SelectorConfig s;
    EXPECT_EQ(code_of([&] { run_stability_study(d, s, 1, {}, 3); }), ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] { run_stability_study(d, s, 3, {}, 6); }), ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] { run_stability_study(d, s, 3, {}, 0); }), ErrorCode::invalid_input);
}

// Reports and emitted files.

TEST(RunReport, JsonRoundTrip) {
    const auto d = generate_wealth_dummy(100, 2);
    auto r = run_sweep(d, request(SelectorId::chi2));
    r.nogueira = 0.25;
    r.kuncheva = -0.125;
    r.warnings.push_back("note");
    const auto j = to_json(r);
    for (const char* key : {"dataset_id", "selector_id", "measure_id", "range", "stride", "fsdem", "stability",
                            "bfi", "nogueira", "kuncheva", "curve", "derivative", "seed", "wall_time_ms", "version"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(run_report_from_json(nlohmann::json::parse(j.dump())), r);
    auto broken = nlohmann::json::parse(j.dump());
    broken.erase("fsdem");
    EXPECT_EQ(code_of([&] { run_report_from_json(broken); }), ErrorCode::format);
}

TEST(Emit, WritesReportPlotDataAndSummary) {
    const auto dir = test::temp_dir("emit");
    const auto d = load_csv(test::data_path("iris.csv"));
    auto req = request(SelectorId::info_gain);
    const std::vector<RunReport> reports{run_sweep(d, req), [&] {
                                             req.selector.id = SelectorId::random;
                                             return run_sweep(d, req);
                                         }()};
    const auto files = emit_report(reports, ReportFormat::json, dir);
    EXPECT_EQ(files.size(), 7u);

    const auto json_path = dir / "iris__info_gain__accuracy.json";
    EXPECT_EQ(run_report_from_json(nlohmann::json::parse(slurp(json_path))), reports[0]);

    const auto curve = lines(dir / "iris__info_gain__accuracy.curve.csv");
    EXPECT_EQ(curve.size(), 1u + 4u);
    EXPECT_EQ(curve[0], "x,g");
    EXPECT_EQ(lines(dir / "iris__random__accuracy.derivative.csv").size(), 1u + 4u);
    EXPECT_EQ(lines(dir / "summary.csv").size(), 1u + 2u);

    const auto csv_dir = test::temp_dir("emit-csv");
    EXPECT_EQ(emit_report(reports, ReportFormat::csv, csv_dir).size(), 5u);
    EXPECT_FALSE(fs::exists(csv_dir / "iris__info_gain__accuracy.json"));
}

TEST(Emit, IoErrorsNameThePath) {
    const auto dir = test::temp_dir("emit-blocked");
    std::ofstream(dir / "file") << "x";
    const auto d = generate_wealth_dummy(60, 2);
    const std::vector<RunReport> reports{run_sweep(d, request(SelectorId::chi2))};
    const auto msg = message_of([&] { emit_report(reports, ReportFormat::json, dir / "file" / "sub"); });
    EXPECT_NE(msg.find((dir / "file").string()), std::string::npos) << msg;
    EXPECT_EQ(code_of([&] { emit_report(reports, ReportFormat::json, dir / "file" / "sub"); }), ErrorCode::io);
}

// Benchmarks.

TEST(Benchmark, CrossProductProducesOneReportPerRun) {
    const auto dir = test::temp_dir("bench-basic");
    const auto result = run_benchmark(small_config(dir));
    EXPECT_EQ(result.reports.size(), 4u);
    EXPECT_TRUE(result.failures.empty());
    EXPECT_EQ(result.summary.size(), 2u);
    EXPECT_TRUE(fs::exists(dir / "summary.csv"));
    EXPECT_TRUE(fs::exists(dir / "summary.json"));
    EXPECT_EQ(lines(dir / "summary.csv").size(), 5u);
    for (const auto& r : result.reports) {
        EXPECT_TRUE(r.nogueira.has_value());
        EXPECT_TRUE(r.kuncheva.has_value());
        EXPECT_TRUE(fs::exists(dir / (report_basename(r) + ".json")));
    }
    EXPECT_EQ(result.reports[0].metric.dataset_id, "wealth");
    EXPECT_EQ(result.reports[3].metric.selector_id, "info_gain");
}

TEST(Benchmark, ReportsAreByteIdenticalAcrossWorkerCounts) {
    const auto one = test::temp_dir("bench-w1");
    const auto four = test::temp_dir("bench-w4");
    run_benchmark(small_config(one), {1, false});
    run_benchmark(small_config(four), {4, false});
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(one)) {
        const auto name = entry.path().filename();
        EXPECT_EQ(slurp(entry.path()), slurp(four / name)) << name;
        ++compared;
    }
    EXPECT_EQ(compared, 4u * 3u + 2u);
}

TEST(Benchmark, AddingARunLeavesOtherRunsUnchanged) {
    const auto base_dir = test::temp_dir("bench-base");
    const auto more_dir = test::temp_dir("bench-more");
    auto base = small_config(base_dir);
    auto more = small_config(more_dir);
    SelectorConfig chi;
    chi.id = SelectorId::chi2;
    more.selectors.insert(more.selectors.begin(), chi);
    run_benchmark(base);
    run_benchmark(more);
    for (const char* name : {"wealth__random__accuracy.json", "iris__info_gain__accuracy.json"}) {
        EXPECT_EQ(slurp(base_dir / name), slurp(more_dir / name)) << name;
    }
}

TEST(Benchmark, FailedRunsAreRecordedAndTheRestProceed) {
    const auto dir = test::temp_dir("bench-fail");
    auto cfg = small_config(dir);
    DatasetSource missing;
    missing.id = "missing";
    missing.path = (dir / "missing.csv").string();
    cfg.datasets.push_back(missing);
    const auto result = run_benchmark(cfg);
    EXPECT_EQ(result.reports.size(), 4u);
    ASSERT_EQ(result.failures.size(), 2u);
    EXPECT_EQ(result.failures[0].dataset_id, "missing");
    EXPECT_TRUE(result.partial_failure());
    const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    EXPECT_EQ(summary.at("failures").size(), 2u);
}

TEST(Benchmark, SummaryMeansMatchEmittedReports) {
    const auto dir = test::temp_dir("bench-means");
    run_benchmark(small_config(dir));
    const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    for (const auto& s : summary.at("selectors")) {
        double fsdem_sum = 0.0, stab_sum = 0.0;
        int n = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            const auto name = entry.path().filename().string();
            if (entry.path().extension() != ".json" || name == "summary.json") continue;
            const auto r = run_report_from_json(nlohmann::json::parse(slurp(entry.path())));
            if (r.metric.selector_id != s.at("selector_id") || r.metric.measure_id != s.at("measure_id")) continue;
            fsdem_sum += r.metric.fsdem;
            stab_sum += r.metric.stability;
            ++n;
        }
        ASSERT_EQ(n, s.at("runs").get<int>());
        EXPECT_NEAR(s.at("mean_fsdem").get<double>(), fsdem_sum / n, 1e-15);
        EXPECT_NEAR(s.at("mean_stability").get<double>(), stab_sum / n, 1e-15);
    }
}

TEST(BenchmarkConfig, ParsesShorthandsAndResolvesPaths) {
    const auto j = nlohmann::json::parse(R"({
        "datasets": ["data/iris.csv", {"path": "wealth", "n": 80, "seed": 4, "range": {"a": 2, "b": 5}}],
        "selectors": ["random", {"id": "forest", "trees": 12}],
        "evaluators": ["accuracy", {"measure": "clacc", "kmeans": {"restarts": 2}}],
        "stride": 2, "repeats": 4, "noise": {"level": 0.2}, "master_seed": 9,
        "output_dir": "out", "fitness": {"k_c": 0.8, "k_p": 0.2}
    })");
    const auto cfg = parse_benchmark_config(j, "/base");
    ASSERT_EQ(cfg.datasets.size(), 2u);
    EXPECT_EQ(cfg.datasets[0].id, "iris");
    EXPECT_EQ(cfg.datasets[0].path, "/base/data/iris.csv");
    EXPECT_EQ(cfg.datasets[1].id, "wealth");
    EXPECT_EQ(cfg.datasets[1].wealth_rows, 80u);
    EXPECT_EQ(cfg.datasets[1].range, MetricRange(2, 5));
    EXPECT_EQ(cfg.selectors[1].forest.trees, 12);
    EXPECT_EQ(cfg.evaluators[1].measure, Measure::clacc);
    EXPECT_EQ(cfg.evaluators[1].kmeans.restarts, 2);
    EXPECT_EQ(cfg.stride, 2);
    EXPECT_EQ(cfg.noise.level, 0.2);
    EXPECT_EQ(cfg.output_dir, fs::path("/base/out"));
    EXPECT_EQ(cfg.weights.k_p(), 0.2);
}

TEST(BenchmarkConfig, RejectsInvalidConfigs) {
    const auto parse = [](const char* text) { return parse_benchmark_config(nlohmann::json::parse(text)); };
    EXPECT_EQ(code_of([&] { parse(R"({"datasets": [], "selectors": ["random"], "evaluators": ["accuracy"]})"); }),
              ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] {
                  parse(R"({"datasets": ["wealth"], "selectors": ["random"], "evaluators": ["accuracy"], "bogus": 1})");
              }),
              ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] { parse(R"({"datasets": ["wealth"], "selectors": ["lasso"], "evaluators": ["accuracy"]})"); }),
              ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] { parse(R"({"datasets": ["wealth"], "selectors": ["random"]})"); }),
              ErrorCode::invalid_input);
    EXPECT_EQ(code_of([&] {
                  parse(R"({"datasets": ["wealth", "wealth"], "selectors": ["random"], "evaluators": ["accuracy"]})");
              }),
              ErrorCode::invalid_input);
    EXPECT_EQ(code_of([] { load_benchmark_config("/nonexistent/config.json"); }), ErrorCode::io);
}

}  // namespace
}  // namespace fsdem
