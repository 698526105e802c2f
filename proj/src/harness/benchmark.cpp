#include "fsdem/harness/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "fsdem/core/error.hpp"
#include "fsdem/core/seed.hpp"
#include "fsdem/harness/seeding.hpp"
#include "fsdem/harness/stability_study.hpp"
#include "fsdem/harness/sweep.hpp"

namespace fsdem {

namespace {

struct Job {
    std::size_t dataset;
    std::size_t selector;
    std::size_t evaluator;
};

struct Outcome {
    std::optional<RunReport> report;
    std::optional<RunFailure> failure;
};

RunReport run_job(const BenchmarkConfig& config, const DatasetSource& source, const Dataset& data,
                  const SelectorConfig& selector, const EvaluatorConfig& evaluator) {
    const std::string selector_id(to_string(selector.id));
    const std::string measure_id(to_string(evaluator.measure));
    const auto seed_for = [&](std::uint64_t repeat) {
        return run_seed(config.master_seed, source.id, selector_id, measure_id, repeat);
    };

    SweepRequest req;
    req.selector = selector;
    req.evaluator = evaluator;
    req.range = source.range ? source.range : config.range;
    req.stride = config.stride;
    req.weights = config.weights;
    req.seed = seed_for(0);
    req.record_wall_time = config.record_wall_time;
    RunReport report = run_sweep(data, req);

    if (config.repeats >= 2) {
        const std::size_t d = data.features();
        const std::size_t k = config.stability_k ? static_cast<std::size_t>(*config.stability_k)
                                                 : std::max<std::size_t>(1, d / 2);
        try {
            const auto s = run_stability_study(data, selector, static_cast<std::size_t>(config.repeats),
                                               config.noise, k,
                                               [&](std::size_t r) { return seed_for(r + 1); });
            report.nogueira = s.nogueira;
            report.kuncheva = s.kuncheva;
        } catch (const Error& e) {
            report.warnings.push_back(std::string("stability study skipped: ") + e.what());
        }
    }
    return report;
}

}  // namespace

nlohmann::ordered_json summary_to_json(const BenchmarkResult& result) {
    nlohmann::ordered_json j;
    j["runs"] = result.reports.size();
    auto& selectors = j["selectors"] = nlohmann::ordered_json::array();
    for (const auto& s : result.summary) {
        selectors.push_back({{"selector_id", s.selector_id},
                             {"measure_id", s.measure_id},
                             {"runs", s.runs},
                             {"mean_fsdem", s.mean_fsdem},
                             {"mean_stability", s.mean_stability}});
    }
    auto& failures = j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : result.failures) {
        failures.push_back({{"dataset_id", f.dataset_id},
                            {"selector_id", f.selector_id},
                            {"measure_id", f.measure_id},
                            {"message", f.message}});
    }
    j["version"] = version();
    return j;
}

BenchmarkResult run_benchmark(const BenchmarkConfig& config, const BenchmarkOptions& options) {
    config.validate();
    const int workers = options.workers.value_or(config.workers);
    if (workers < 1) fail(ErrorCode::invalid_input, "workers must be >= 1");

    const auto format = config.write_json ? ReportFormat::json : ReportFormat::csv;
    if (!options.dry_run) {
        std::error_code ec;
        std::filesystem::create_directories(config.output_dir, ec);
        if (ec) fail(ErrorCode::io, "cannot create " + config.output_dir.string() + ": " + ec.message());
    }

    // Datasets load once, up front; a dataset that fails to load fails all of its runs.
    std::vector<std::optional<Dataset>> datasets;
    std::vector<std::string> load_errors(config.datasets.size());
    for (std::size_t i = 0; i < config.datasets.size(); ++i) {
        const auto& src = config.datasets[i];
        try {
            datasets.emplace_back(load_dataset(src, derive_seed(config.master_seed, stable_hash(src.id))));
        } catch (const Error& e) {
            datasets.emplace_back(std::nullopt);
            load_errors[i] = e.what();
        }
    }

    std::vector<Job> jobs;
    for (std::size_t d = 0; d < config.datasets.size(); ++d) {
        for (std::size_t s = 0; s < config.selectors.size(); ++s) {
            for (std::size_t e = 0; e < config.evaluators.size(); ++e) jobs.push_back({d, s, e});
        }
    }

    std::vector<Outcome> outcomes(jobs.size());
    std::vector<std::filesystem::path> written;
    std::mutex writer;
    std::atomic<std::size_t> next{0};

    const auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const auto& job = jobs[i];
            const auto& src = config.datasets[job.dataset];
            const auto& selector = config.selectors[job.selector];
            const auto& evaluator = config.evaluators[job.evaluator];
            Outcome out;
            try {
                if (!datasets[job.dataset]) fail(ErrorCode::ingestion, load_errors[job.dataset]);
                out.report = run_job(config, src, *datasets[job.dataset], selector, evaluator);
            } catch (const std::exception& e) {
                out.failure = RunFailure{src.id, std::string(to_string(selector.id)),
                                         std::string(to_string(evaluator.measure)), e.what()};
            }
            if (out.report && !options.dry_run) {
                std::lock_guard lock(writer);
                try {
                    for (auto& p : write_run_files(*out.report, config.output_dir, format)) {
                        written.push_back(std::move(p));
                    }
                } catch (const Error& e) {
                    out.failure = RunFailure{out.report->metric.dataset_id, out.report->metric.selector_id,
                                             out.report->metric.measure_id, e.what()};
                    out.report.reset();
                }
            }
            outcomes[i] = std::move(out);
        }
    };

    const auto pool_size = std::min<std::size_t>(static_cast<std::size_t>(workers), jobs.size());
    if (pool_size <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < pool_size; ++t) pool.emplace_back(work);
    }

    BenchmarkResult result;
    for (auto& o : outcomes) {
        if (o.report) result.reports.push_back(std::move(*o.report));
        if (o.failure) result.failures.push_back(std::move(*o.failure));
    }
    result.summary = summarize(result.reports);
    std::sort(written.begin(), written.end());
    result.written = std::move(written);

    if (!options.dry_run) {
        const auto csv = config.output_dir / "summary.csv";
        write_summary_csv(result.reports, csv);
        const auto json = config.output_dir / "summary.json";
        write_text_file(json, summary_to_json(result).dump(2) + "\n");
        result.written.push_back(csv);
        result.written.push_back(json);
    }
    return result;
}

}  // namespace fsdem
