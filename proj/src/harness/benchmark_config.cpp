#include "fsdem/harness/benchmark_config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <string_view>

#include "fsdem/core/error.hpp"
#include "fsdem/data/wealth.hpp"

namespace fsdem {

namespace {

using nlohmann::json;

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) fail(ErrorCode::invalid_input, std::string(where) + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(ErrorCode::invalid_input, "unknown key '" + key + "' in " + std::string(where));
        }
    }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return fallback;
    return it->get<T>();
}

std::optional<MetricRange> parse_range(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    check_keys(*it, key, {"a", "b"});
    return MetricRange(it->at("a").get<int>(), it->at("b").get<int>());
}

DatasetSource parse_dataset(const json& j) {
    DatasetSource src;
    if (j.is_string()) {
        src.path = j.get<std::string>();
    } else {
        check_keys(j, "dataset", {"id", "path", "label", "categorical", "missing", "header", "n",
                                  "seed", "range"});
        src.path = j.at("path").get<std::string>();
        src.id = get_or<std::string>(j, "id", "");
        if (const auto it = j.find("label"); it != j.end()) {
            if (it->is_number_unsigned()) {
                src.columns.label_column = it->get<std::size_t>();
            } else {
                src.columns.label_column = it->get<std::string>();
            }
        }
        if (const auto it = j.find("categorical"); it != j.end()) {
            for (const auto& c : *it) {
                if (c.is_number_unsigned()) {
                    src.columns.categorical_indices.insert(c.get<std::size_t>());
                } else {
                    src.columns.categorical_names.insert(c.get<std::string>());
                }
            }
        }
        if (const auto it = j.find("missing"); it != j.end()) {
            src.columns.missing_markers = it->get<std::set<std::string>>();
        }
        if (const auto it = j.find("header"); it != j.end() && !it->is_null()) {
            src.columns.header = it->get<bool>();
        }
        src.wealth_rows = get_or<std::size_t>(j, "n", 500);
        if (const auto it = j.find("seed"); it != j.end() && !it->is_null()) {
            src.wealth_seed = it->get<std::uint64_t>();
        }
        src.range = parse_range(j, "range");
    }
    if (src.id.empty()) {
        src.id = src.is_wealth() ? "wealth" : std::filesystem::path(src.path).stem().string();
    }
    src.columns.dataset_id = src.id;
    return src;
}

}  // namespace

void BenchmarkConfig::validate() const {
    if (datasets.empty()) fail(ErrorCode::invalid_input, "benchmark needs at least one dataset");
    if (selectors.empty()) fail(ErrorCode::invalid_input, "benchmark needs at least one selector");
    if (evaluators.empty()) fail(ErrorCode::invalid_input, "benchmark needs at least one evaluator");
    if (stride < 1) fail(ErrorCode::invalid_input, "stride must be >= 1");
    if (repeats < 0) fail(ErrorCode::invalid_input, "repeats must be >= 0");
    if (!(noise.level >= 0.0)) fail(ErrorCode::invalid_input, "noise level must be >= 0");
    if (stability_k && *stability_k < 1) fail(ErrorCode::invalid_input, "stability_k must be >= 1");
    if (workers < 1) fail(ErrorCode::invalid_input, "workers must be >= 1");
    for (const auto& s : selectors) s.validate();
    for (const auto& e : evaluators) e.validate();
    std::vector<std::string> ids;
    for (const auto& d : datasets) ids.push_back(d.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        fail(ErrorCode::invalid_input, "dataset ids must be unique");
    }
}

SelectorConfig parse_selector_config(const json& j) {
    SelectorConfig cfg;
    if (j.is_string()) {
        cfg.id = parse_selector(j.get<std::string>());
        return cfg;
    }
    check_keys(j, "selector", {"id", "bins", "trees", "features_per_split", "max_depth",
                               "min_samples_split", "sfs_evaluator", "sfs_steps"});
    cfg.id = parse_selector(j.at("id").get<std::string>());
    cfg.bins = get_or(j, "bins", cfg.bins);
    cfg.forest.trees = get_or(j, "trees", cfg.forest.trees);
    if (const auto it = j.find("features_per_split"); it != j.end() && !it->is_null()) {
        if (it->is_string()) {
            if (it->get<std::string>() != "sqrt") {
                fail(ErrorCode::invalid_input, "features_per_split must be \"sqrt\" or an integer");
            }
        } else {
            cfg.forest.features_per_split = it->get<int>();
        }
    }
    if (const auto it = j.find("max_depth"); it != j.end() && !it->is_null()) {
        cfg.forest.max_depth = it->get<int>();
    }
    cfg.forest.min_samples_split = get_or(j, "min_samples_split", cfg.forest.min_samples_split);
    if (const auto it = j.find("sfs_evaluator"); it != j.end()) {
        cfg.sfs_evaluator = parse_measure(it->get<std::string>());
    }
    if (const auto it = j.find("sfs_steps"); it != j.end() && !it->is_null()) {
        cfg.sfs_steps = it->get<int>();
    }
    cfg.validate();
    return cfg;
}

EvaluatorConfig parse_evaluator_config(const json& j) {
    EvaluatorConfig cfg;
    if (j.is_string()) {
        cfg.measure = parse_measure(j.get<std::string>());
        return cfg;
    }
    check_keys(j, "evaluator", {"measure", "knn_k", "folds", "kmeans"});
    cfg.measure = parse_measure(j.at("measure").get<std::string>());
    cfg.knn_k = get_or(j, "knn_k", cfg.knn_k);
    cfg.folds = get_or(j, "folds", cfg.folds);
    if (const auto it = j.find("kmeans"); it != j.end()) {
        const auto& km = *it;
        check_keys(km, "kmeans", {"clusters", "restarts", "max_iter", "tol"});
        if (const auto c = km.find("clusters"); c != km.end() && !c->is_null()) {
            if (c->is_string()) {
                if (c->get<std::string>() != "num_classes") {
                    fail(ErrorCode::invalid_input, "clusters must be \"num_classes\" or an integer");
                }
            } else {
                cfg.kmeans.clusters = c->get<int>();
            }
        }
        cfg.kmeans.restarts = get_or(km, "restarts", cfg.kmeans.restarts);
        cfg.kmeans.max_iter = get_or(km, "max_iter", cfg.kmeans.max_iter);
        cfg.kmeans.tol = get_or(km, "tol", cfg.kmeans.tol);
    }
    cfg.validate();
    return cfg;
}

nlohmann::ordered_json to_json(const SelectorConfig& cfg) {
    nlohmann::ordered_json j;
    j["id"] = to_string(cfg.id);
    j["bins"] = cfg.bins;
    j["trees"] = cfg.forest.trees;
    j["features_per_split"] = cfg.forest.features_per_split
                                  ? nlohmann::ordered_json(*cfg.forest.features_per_split)
                                  : nlohmann::ordered_json("sqrt");
    j["max_depth"] = cfg.forest.max_depth ? nlohmann::ordered_json(*cfg.forest.max_depth)
                                          : nlohmann::ordered_json(nullptr);
    j["min_samples_split"] = cfg.forest.min_samples_split;
    j["sfs_evaluator"] = to_string(cfg.sfs_evaluator);
    j["sfs_steps"] = cfg.sfs_steps ? nlohmann::ordered_json(*cfg.sfs_steps) : nlohmann::ordered_json(nullptr);
    return j;
}

nlohmann::ordered_json to_json(const EvaluatorConfig& cfg) {
    nlohmann::ordered_json j;
    j["measure"] = to_string(cfg.measure);
    j["knn_k"] = cfg.knn_k;
    j["folds"] = cfg.folds;
    j["kmeans"] = {{"clusters", cfg.kmeans.clusters ? nlohmann::ordered_json(*cfg.kmeans.clusters)
                                                    : nlohmann::ordered_json("num_classes")},
                   {"restarts", cfg.kmeans.restarts},
                   {"max_iter", cfg.kmeans.max_iter},
                   {"tol", cfg.kmeans.tol}};
    return j;
}

BenchmarkConfig parse_benchmark_config(const json& j, const std::filesystem::path& base_dir) {
    try {
        check_keys(j, "benchmark config",
                   {"datasets", "selectors", "evaluators", "range", "stride", "repeats", "noise",
                    "stability_k", "fitness", "output_dir", "master_seed", "workers",
                    "record_wall_time", "format"});
        BenchmarkConfig cfg;
        for (const auto& d : j.at("datasets")) {
            auto src = parse_dataset(d);
            if (!src.is_wealth() && std::filesystem::path(src.path).is_relative()) {
                src.path = (base_dir / src.path).lexically_normal().string();
            }
            cfg.datasets.push_back(std::move(src));
        }
        for (const auto& s : j.at("selectors")) cfg.selectors.push_back(parse_selector_config(s));
        for (const auto& e : j.at("evaluators")) cfg.evaluators.push_back(parse_evaluator_config(e));
        cfg.range = parse_range(j, "range");
        cfg.stride = get_or(j, "stride", cfg.stride);
        cfg.repeats = get_or(j, "repeats", cfg.repeats);
        if (const auto it = j.find("noise"); it != j.end()) {
            check_keys(*it, "noise", {"level", "seed"});
            cfg.noise.level = get_or(*it, "level", cfg.noise.level);
            cfg.noise.seed = get_or<std::uint64_t>(*it, "seed", cfg.noise.seed);
        }
        if (const auto it = j.find("stability_k"); it != j.end() && !it->is_null()) {
            cfg.stability_k = it->get<int>();
        }
        if (const auto it = j.find("fitness"); it != j.end()) {
            check_keys(*it, "fitness", {"k_c", "k_p"});
            cfg.weights = FitnessWeights(get_or(*it, "k_c", 0.9), get_or(*it, "k_p", 0.1));
        }
        cfg.output_dir = base_dir / get_or<std::string>(j, "output_dir", "fsdem-out");
        cfg.master_seed = get_or<std::uint64_t>(j, "master_seed", 0);
        cfg.workers = get_or(j, "workers", cfg.workers);
        cfg.record_wall_time = get_or(j, "record_wall_time", false);
        const auto format = get_or<std::string>(j, "format", "json");
        if (format != "json" && format != "csv") {
            fail(ErrorCode::invalid_input, "format must be \"json\" or \"csv\"");
        }
        cfg.write_json = format == "json";
        cfg.validate();
        return cfg;
    } catch (const json::exception& e) {
        fail(ErrorCode::invalid_input, std::string("malformed benchmark config: ") + e.what());
    }
}

BenchmarkConfig load_benchmark_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io, "cannot open config " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(ErrorCode::invalid_input, path.string() + ": " + e.what());
    }
    return parse_benchmark_config(j, path.parent_path());
}

Dataset load_dataset(const DatasetSource& source, std::uint64_t fallback_seed) {
    if (source.is_wealth()) {
        const auto data = generate_wealth_dummy(source.wealth_rows, source.wealth_seed.value_or(fallback_seed));
        return Dataset(data.x(), {data.y().begin(), data.y().end()},
                       {data.feature_names().begin(), data.feature_names().end()}, source.id,
                       {data.class_names().begin(), data.class_names().end()});
    }
    return load_csv(source.path, source.columns);
}

}  // namespace fsdem
