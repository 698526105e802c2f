#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fsdem/core/fitness.hpp"
#include "fsdem/core/observation_curve.hpp"
#include "fsdem/data/csv.hpp"
#include "fsdem/data/preprocess.hpp"
#include "fsdem/evaluators/evaluator_config.hpp"
#include "fsdem/selectors/selector.hpp"

namespace fsdem {

/// One dataset entry: a CSV path, or the literal "wealth" for the generator.
struct DatasetSource {
    std::string id;
    std::string path;
    ColumnSpec columns;
    std::size_t wealth_rows = 500;
    /// Generator seed for "wealth"; nullopt derives it from the master seed.
    std::optional<std::uint64_t> wealth_seed;
    std::optional<MetricRange> range;

    bool is_wealth() const { return path == "wealth"; }
};

struct BenchmarkConfig {
    std::vector<DatasetSource> datasets;
    std::vector<SelectorConfig> selectors;
    std::vector<EvaluatorConfig> evaluators;
    /// Applies to datasets without their own range; nullopt means [1, d].
    std::optional<MetricRange> range;
    int stride = 1;
    /// Noisy repeats for the selection-stability study; < 2 disables it.
    int repeats = 10;
    NoiseSpec noise{0.1, 0};
    /// Prefix length compared by the stability study; nullopt means max(1, d / 2).
    std::optional<int> stability_k;
    FitnessWeights weights;
    std::filesystem::path output_dir = "fsdem-out";
    std::uint64_t master_seed = 0;
    int workers = 1;
    bool record_wall_time = false;
    bool write_json = true;

    /// Throws invalid-input when a list is empty or a scalar is out of range.
    void validate() const;
};

/// Relative dataset paths and output_dir resolve against base_dir.
BenchmarkConfig parse_benchmark_config(const nlohmann::json& j,
                                       const std::filesystem::path& base_dir = {});
BenchmarkConfig load_benchmark_config(const std::filesystem::path& path);

/// Accepts a bare identifier string or an object with an "id" field.
SelectorConfig parse_selector_config(const nlohmann::json& j);
/// Accepts a bare measure string or an object with a "measure" field.
EvaluatorConfig parse_evaluator_config(const nlohmann::json& j);

nlohmann::ordered_json to_json(const SelectorConfig& cfg);
nlohmann::ordered_json to_json(const EvaluatorConfig& cfg);

/// Loads a dataset entry (CSV or generated wealth data). fallback_seed feeds
/// the generator when the entry names no seed.
Dataset load_dataset(const DatasetSource& source, std::uint64_t fallback_seed);

}  // namespace fsdem
