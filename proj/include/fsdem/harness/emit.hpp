#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fsdem/harness/run_report.hpp"

namespace fsdem {

enum class ReportFormat { json, csv };

/// Mean FSDEM and mean stability of one selector under one measure.
struct SelectorSummary {
    std::string selector_id;
    std::string measure_id;
    std::size_t runs = 0;
    double mean_fsdem = 0.0;
    double mean_stability = 0.0;
};

/// Groups by (selector, measure) in order of first appearance.
std::vector<SelectorSummary> summarize(std::span<const RunReport> reports);

/// "<dataset>__<selector>__<measure>" with filesystem-unfriendly characters replaced.
std::string report_basename(const RunReport& report);

/// Per-run files: <base>.json (json format only), <base>.curve.csv with
/// (x, g(x)) and <base>.derivative.csv with (x, g'(x)), both on the integer
/// grid a..b. Returns the paths written. Throws io with the path on failure.
std::vector<std::filesystem::path> write_run_files(const RunReport& report,
                                                   const std::filesystem::path& dir,
                                                   ReportFormat format);

/// One row per run.
void write_summary_csv(std::span<const RunReport> reports, const std::filesystem::path& path);

/// Creates the directory, writes every run's files and summary.csv.
std::vector<std::filesystem::path> emit_report(std::span<const RunReport> reports, ReportFormat format,
                                               const std::filesystem::path& output_dir);

/// Writes text to a file, throwing io with the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fsdem
