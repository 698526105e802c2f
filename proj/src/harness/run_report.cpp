#include "fsdem/harness/run_report.hpp"

#include "fsdem/core/error.hpp"

namespace fsdem {

std::string_view version() { return FSDEM_VERSION; }

bool operator==(const RunReport& l, const RunReport& r) {
    const auto& a = l.metric;
    const auto& b = r.metric;
    return a.fsdem == b.fsdem && a.stability == b.stability && a.range == b.range &&
           a.measure_id == b.measure_id && a.selector_id == b.selector_id &&
           a.dataset_id == b.dataset_id && a.observation_count == b.observation_count &&
           l.stride == r.stride && l.curve == r.curve && l.derivative == r.derivative &&
           l.bfi == r.bfi && l.nogueira == r.nogueira && l.kuncheva == r.kuncheva &&
           l.seed == r.seed && l.wall_time_ms == r.wall_time_ms &&
           l.fingerprint == r.fingerprint && l.folds_used == r.folds_used &&
           l.warnings == r.warnings && l.version == r.version;
}

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const RunReport& report) {
    const auto& m = report.metric;
    nlohmann::ordered_json j;
    j["dataset_id"] = m.dataset_id;
    j["selector_id"] = m.selector_id;
    j["measure_id"] = m.measure_id;
    j["range"] = {{"a", m.range.a()}, {"b", m.range.b()}};
    j["stride"] = report.stride;
    j["fsdem"] = m.fsdem;
    j["stability"] = m.stability;
    j["bfi"] = {{"value", report.bfi.value},
                {"k_best", report.bfi.k_best},
                {"k_c", report.bfi.k_c},
                {"k_p", report.bfi.k_p}};
    j["nogueira"] = optional_number(report.nogueira);
    j["kuncheva"] = optional_number(report.kuncheva);
    auto curve = nlohmann::ordered_json::array();
    for (const auto& p : report.curve) curve.push_back({p.k, p.value});
    j["curve"] = std::move(curve);
    auto derivative = nlohmann::ordered_json::array();
    for (const auto& s : report.derivative) derivative.push_back({s.x, s.slope});
    j["derivative"] = std::move(derivative);
    j["seed"] = report.seed;
    j["wall_time_ms"] = report.wall_time_ms;
    j["version"] = report.version;
    j["observation_count"] = m.observation_count;
    j["folds_used"] = report.folds_used;
    j["fingerprint"] = report.fingerprint;
    j["warnings"] = report.warnings;
    return j;
}

RunReport run_report_from_json(const nlohmann::json& j) {
    try {
        RunReport r;
        r.metric.dataset_id = j.at("dataset_id").get<std::string>();
        r.metric.selector_id = j.at("selector_id").get<std::string>();
        r.metric.measure_id = j.at("measure_id").get<std::string>();
        r.metric.range = MetricRange(j.at("range").at("a").get<int>(), j.at("range").at("b").get<int>());
        r.metric.fsdem = j.at("fsdem").get<double>();
        r.metric.stability = j.at("stability").get<double>();
        r.metric.observation_count = j.at("observation_count").get<int>();
        r.stride = j.at("stride").get<int>();
        const auto& bfi = j.at("bfi");
        r.bfi = {bfi.at("value").get<double>(), bfi.at("k_best").get<int>(),
                 bfi.at("k_c").get<double>(), bfi.at("k_p").get<double>()};
        if (!j.at("nogueira").is_null()) r.nogueira = j.at("nogueira").get<double>();
        if (!j.at("kuncheva").is_null()) r.kuncheva = j.at("kuncheva").get<double>();
        for (const auto& p : j.at("curve")) r.curve.push_back({p.at(0).get<int>(), p.at(1).get<double>()});
        for (const auto& s : j.at("derivative")) {
            r.derivative.push_back({s.at(0).get<int>(), s.at(1).get<double>()});
        }
        r.seed = j.at("seed").get<std::uint64_t>();
        r.wall_time_ms = j.at("wall_time_ms").get<double>();
        r.version = j.at("version").get<std::string>();
        r.folds_used = j.at("folds_used").get<int>();
        r.fingerprint = j.at("fingerprint").get<std::string>();
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::format, std::string("malformed run report: ") + e.what());
    }
}

}  // namespace fsdem
