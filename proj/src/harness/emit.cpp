#include "fsdem/harness/emit.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "fsdem/core/curve_metrics.hpp"
#include "fsdem/core/error.hpp"

namespace fsdem {

namespace {

std::string number(double v) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out.precision(std::numeric_limits<double>::max_digits10);
    out << v;
    return out.str();
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (auto& c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                        c == '-' || c == '_' || c == '.';
        if (!ok) c = '_';
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io, "cannot write " + path.string());
    out << text;
    out.close();
    if (!out) fail(ErrorCode::io, "failed writing " + path.string());
}

std::vector<SelectorSummary> summarize(std::span<const RunReport> reports) {
    std::vector<SelectorSummary> out;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    for (const auto& r : reports) {
        const auto key = std::make_pair(r.metric.selector_id, r.metric.measure_id);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            out.push_back({key.first, key.second, 0, 0.0, 0.0});
        }
        auto& s = out[it->second];
        ++s.runs;
        s.mean_fsdem += r.metric.fsdem;
        s.mean_stability += r.metric.stability;
    }
    for (auto& s : out) {
        s.mean_fsdem /= static_cast<double>(s.runs);
        s.mean_stability /= static_cast<double>(s.runs);
    }
    return out;
}

std::string report_basename(const RunReport& report) {
    return sanitize(report.metric.dataset_id) + "__" + sanitize(report.metric.selector_id) + "__" +
           sanitize(report.metric.measure_id);
}

std::vector<std::filesystem::path> write_run_files(const RunReport& report,
                                                   const std::filesystem::path& dir,
                                                   ReportFormat format) {
    std::vector<std::filesystem::path> written;
    const std::string base = report_basename(report);
    if (format == ReportFormat::json) {
        const auto path = dir / (base + ".json");
        write_text_file(path, to_json(report).dump(2) + "\n");
        written.push_back(path);
    }

    const auto curve = build_curve(report.curve);
    const auto& range = report.metric.range;
    std::string g = "x,g\n";
    for (int x = range.a(); x <= range.b(); ++x) g += std::to_string(x) + "," + number(curve.at(x)) + "\n";
    const auto curve_path = dir / (base + ".curve.csv");
    write_text_file(curve_path, g);
    written.push_back(curve_path);

    std::string dg = "x,slope\n";
    for (const auto& s : report.derivative) dg += std::to_string(s.x) + "," + number(s.slope) + "\n";
    const auto derivative_path = dir / (base + ".derivative.csv");
    write_text_file(derivative_path, dg);
    written.push_back(derivative_path);
    return written;
}

void write_summary_csv(std::span<const RunReport> reports, const std::filesystem::path& path) {
    std::string out =
        "dataset_id,selector_id,measure_id,a,b,stride,fsdem,stability,bfi,k_best,nogueira,kuncheva,"
        "seed,wall_time_ms,fingerprint\n";
    const auto optional = [](const std::optional<double>& v) { return v ? number(*v) : std::string(); };
    for (const auto& r : reports) {
        const auto& m = r.metric;
        out += csv_field(m.dataset_id) + "," + csv_field(m.selector_id) + "," + csv_field(m.measure_id) +
               "," + std::to_string(m.range.a()) + "," + std::to_string(m.range.b()) + "," +
               std::to_string(r.stride) + "," + number(m.fsdem) + "," + number(m.stability) + "," +
               number(r.bfi.value) + "," + std::to_string(r.bfi.k_best) + "," + optional(r.nogueira) +
               "," + optional(r.kuncheva) + "," + std::to_string(r.seed) + "," +
               number(r.wall_time_ms) + "," + r.fingerprint + "\n";
    }
    write_text_file(path, out);
}

std::vector<std::filesystem::path> emit_report(std::span<const RunReport> reports, ReportFormat format,
                                               const std::filesystem::path& output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) fail(ErrorCode::io, "cannot create " + output_dir.string() + ": " + ec.message());
    std::vector<std::filesystem::path> written;
    for (const auto& r : reports) {
        for (auto& p : write_run_files(r, output_dir, format)) written.push_back(std::move(p));
    }
    const auto summary = output_dir / "summary.csv";
    write_summary_csv(reports, summary);
    written.push_back(summary);
    return written;
}

}  // namespace fsdem
