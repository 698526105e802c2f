#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fsdem/harness/benchmark_config.hpp"
#include "fsdem/harness/emit.hpp"
#include "fsdem/harness/run_report.hpp"

namespace fsdem {

struct RunFailure {
    std::string dataset_id;
    std::string selector_id;
    std::string measure_id;
    std::string message;
};

struct BenchmarkResult {
    /// Successful runs in cross-product order (dataset, selector, evaluator).
    std::vector<RunReport> reports;
    std::vector<RunFailure> failures;
    std::vector<SelectorSummary> summary;
    std::vector<std::filesystem::path> written;

    bool partial_failure() const { return !failures.empty(); }
};

struct BenchmarkOptions {
    /// Overrides config.workers.
    std::optional<int> workers;
    /// Skip all file output.
    bool dry_run = false;
};

/// Runs every (dataset, selector, evaluator) job on a worker pool. Each run
/// seeds itself from run_seed(master, dataset, selector, measure, 0); the
/// stability study uses repeat indices 1..repeats. Files are written by one
/// writer as runs complete; summary.csv and summary.json come last. A failed
/// run is recorded and the rest proceed. Throws only for an invalid config or
/// an unwritable output directory.
BenchmarkResult run_benchmark(const BenchmarkConfig& config, const BenchmarkOptions& options = {});

nlohmann::ordered_json summary_to_json(const BenchmarkResult& result);

}  // namespace fsdem
