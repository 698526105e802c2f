#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"

#include "fsdem/core/error.hpp"
#include "fsdem/data/csv.hpp"
#include "fsdem/data/wealth.hpp"
#include "fsdem/harness/benchmark.hpp"
#include "fsdem/harness/stability_study.hpp"
#include "fsdem/harness/sweep.hpp"

namespace fsdem::cli {

namespace {

struct DataArgs {
    std::string data;
    std::string label;
    std::size_t wealth_rows = 500;
};

void add_data_options(CLI::App& cmd, DataArgs& args) {
    cmd.add_option("--data", args.data, "CSV path, or \"wealth\" for the generated dummy data")->required();
    cmd.add_option("--label", args.label, "label column name (default: last column)");
    cmd.add_option("--rows", args.wealth_rows, "rows of generated wealth data")->check(CLI::PositiveNumber);
}

Dataset load(const DataArgs& args, std::uint64_t seed) {
    DatasetSource src;
    src.path = args.data;
    src.id = src.is_wealth() ? "wealth" : std::filesystem::path(args.data).stem().string();
    src.wealth_rows = args.wealth_rows;
    if (!args.label.empty()) src.columns.label_column = args.label;
    return load_dataset(src, seed);
}

int exit_code(const Error& e) {
    switch (e.code()) {
        case ErrorCode::invalid_input:
        case ErrorCode::invalid_range:
            return usage;
        default:
            return data;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Feature-selection evaluation toolkit", "fsdem"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    // sweep
    DataArgs sweep_data;
    std::string sweep_selector = "info_gain";
    std::string sweep_measure = "accuracy";
    std::optional<int> sweep_a;
    std::optional<int> sweep_b;
    int sweep_stride = 1;
    std::uint64_t sweep_seed = 0;
    std::string sweep_out;
    std::string sweep_format = "json";
    bool sweep_timing = false;
    auto* sweep = app.add_subcommand("sweep", "measure one selector's curve and its FSDEM scores");
    add_data_options(*sweep, sweep_data);
    sweep->add_option("--selector", sweep_selector, "random|info_gain|chi2|forest|sfs");
    sweep->add_option("--measure", sweep_measure, "accuracy|clacc");
    sweep->add_option("--a", sweep_a, "first k of the range (default 1)");
    sweep->add_option("--b", sweep_b, "last k of the range (default d)");
    sweep->add_option("--stride", sweep_stride, "evaluate every stride-th k")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_seed, "run seed");
    sweep->add_option("--out", sweep_out, "directory for the report and plot CSVs (default: JSON to stdout)");
    sweep->add_option("--format", sweep_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_flag("--timing", sweep_timing, "record wall time in the report");

    // stability
    DataArgs stab_data;
    std::string stab_selector = "info_gain";
    int stab_repeats = 10;
    double stab_noise = 0.1;
    std::optional<int> stab_k;
    std::uint64_t stab_seed = 0;
    auto* stability = app.add_subcommand("stability", "selection stability over noisy copies of a dataset");
    add_data_options(*stability, stab_data);
    stability->add_option("--selector", stab_selector, "random|info_gain|chi2|forest|sfs");
    stability->add_option("--repeats", stab_repeats, "noisy copies")->check(CLI::Range(2, 1 << 20));
    stability->add_option("--noise", stab_noise, "noise level as a fraction of each column's stddev")
        ->check(CLI::NonNegativeNumber);
    stability->add_option("--k", stab_k, "prefix length compared (default d/2)");
    stability->add_option("--seed", stab_seed, "master seed");

    // benchmark
    std::string bench_config;
    std::optional<int> bench_workers;
    std::string bench_out;
    auto* benchmark = app.add_subcommand("benchmark", "run a datasets x selectors x evaluators suite");
    benchmark->add_option("--config", bench_config, "benchmark config (JSON)")->required();
    benchmark->add_option("--workers", bench_workers, "worker threads (overrides the config)")
        ->check(CLI::PositiveNumber);
    benchmark->add_option("--out", bench_out, "output directory (overrides the config)");

    // dummy
    std::size_t dummy_n = 500;
    std::uint64_t dummy_seed = 0;
    std::string dummy_out;
    auto* dummy = app.add_subcommand("dummy", "write the synthetic wealth dataset as CSV");
    dummy->add_option("--n", dummy_n, "rows")->check(CLI::PositiveNumber);
    dummy->add_option("--seed", dummy_seed, "generator seed");
    dummy->add_option("--out", dummy_out, "output CSV path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (sweep->parsed()) {
            const Dataset d = load(sweep_data, sweep_seed);
            SweepRequest req;
            req.selector.id = parse_selector(sweep_selector);
            req.evaluator.measure = parse_measure(sweep_measure);
            if (sweep_a || sweep_b) {
                req.range = MetricRange(sweep_a.value_or(1), sweep_b.value_or(static_cast<int>(d.features())));
            }
            req.stride = sweep_stride;
            req.seed = sweep_seed;
            req.record_wall_time = sweep_timing;
            const RunReport report = run_sweep(d, req);
            if (sweep_out.empty()) {
                out << to_json(report).dump(2) << "\n";
            } else {
                const auto format = sweep_format == "csv" ? ReportFormat::csv : ReportFormat::json;
                for (const auto& p : emit_report(std::span(&report, 1), format, sweep_out)) {
                    out << p.string() << "\n";
                }
            }
            return ok;
        }
        if (stability->parsed()) {
            const Dataset d = load(stab_data, stab_seed);
            SelectorConfig selector;
            selector.id = parse_selector(stab_selector);
            selector.seed = stab_seed;
            const int k = stab_k.value_or(std::max(1, static_cast<int>(d.features()) / 2));
            if (k < 1) fail(ErrorCode::invalid_input, "--k must be >= 1");
            const auto r = run_stability_study(d, selector, static_cast<std::size_t>(stab_repeats),
                                               {stab_noise, stab_seed}, static_cast<std::size_t>(k));
            nlohmann::ordered_json j;
            j["dataset_id"] = d.id();
            j["selector_id"] = to_string(selector.id);
            j["repeats"] = stab_repeats;
            j["noise"] = stab_noise;
            j["k"] = k;
            j["nogueira"] = r.nogueira;
            j["kuncheva"] = r.kuncheva;
            out << j.dump(2) << "\n";
            return ok;
        }
        if (benchmark->parsed()) {
            BenchmarkConfig cfg = load_benchmark_config(bench_config);
            if (!bench_out.empty()) cfg.output_dir = bench_out;
            const auto result = run_benchmark(cfg, {bench_workers, false});
            out << summary_to_json(result).dump(2) << "\n";
            for (const auto& f : result.failures) {
                err << "run failed: " << f.dataset_id << "/" << f.selector_id << "/" << f.measure_id << ": "
                    << f.message << "\n";
            }
            return result.partial_failure() ? partial : ok;
        }
        if (dummy->parsed()) {
            write_csv(generate_wealth_dummy(dummy_n, dummy_seed), dummy_out);
            out << dummy_out << "\n";
            return ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return data;
    }
    return usage;
}

}  // namespace fsdem::cli
