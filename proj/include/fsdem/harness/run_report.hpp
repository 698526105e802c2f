#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fsdem/core/curve_metrics.hpp"
#include "fsdem/core/metric_report.hpp"

namespace fsdem {

std::string_view version();

struct BfiSummary {
    double value = 0.0;
    /// k with the highest observed measure (smallest k on ties).
    int k_best = 0;
    double k_c = 0.0;
    double k_p = 0.0;

    friend bool operator==(const BfiSummary&, const BfiSummary&) = default;
};

/// Everything one sweep produces; serializes to the stable report schema.
struct RunReport {
    MetricReport metric;
    int stride = 1;
    std::vector<CurvePoint> curve;
    std::vector<Slope> derivative;
    BfiSummary bfi;
    std::optional<double> nogueira;
    std::optional<double> kuncheva;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;
    std::string fingerprint;
    int folds_used = 0;
    std::vector<std::string> warnings;
    std::string version{fsdem::version()};
};

bool operator==(const RunReport& l, const RunReport& r);

nlohmann::ordered_json to_json(const RunReport& report);
/// Throws format on missing or mistyped fields.
RunReport run_report_from_json(const nlohmann::json& j);

}  // namespace fsdem
