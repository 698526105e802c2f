#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fsdem/data/dataset.hpp"

namespace fsdem {

/// How to interpret the columns of a CSV file.
struct ColumnSpec {
    /// Label column by header name or 0-based index; empty means the last column.
    std::variant<std::monostate, std::string, std::size_t> label_column;
    /// Columns forced to categorical, by header name or 0-based index. Columns
    /// holding any non-numeric, non-missing cell are categorical regardless.
    std::set<std::string> categorical_names;
    std::set<std::size_t> categorical_indices;
    std::set<std::string> missing_markers{"?", ""};
    /// nullopt: detect. A header is present iff the first row holds an
    /// unparseable cell in a column that is numeric in all later rows.
    std::optional<bool> header;
    /// Defaults to the file stem.
    std::string dataset_id;
};

/// One parsed CSV record and the 1-based line it starts on.
struct CsvRecord {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// RFC-4180 parser: quoted fields, doubled quotes, embedded separators and
/// newlines, CRLF or LF endings. Blank lines are skipped. Throws format with
/// the line and column of the first malformed field.
std::vector<CsvRecord> parse_csv(std::string_view text);

/// Parses a finite decimal number, ignoring surrounding whitespace.
std::optional<double> parse_number(std::string_view cell);

/// Loads a labeled dataset. Categorical features are ordinal-encoded in sorted
/// category order, missing numeric cells take the column median, missing
/// categorical cells the column mode, and labels map to 0..C-1 in sorted text
/// order. Throws format on malformed files and ingestion on unusable columns.
Dataset load_csv(const std::filesystem::path& path, const ColumnSpec& spec = {});

/// Same as load_csv for in-memory text.
Dataset load_csv_text(std::string_view text, const ColumnSpec& spec, std::string dataset_id);

/// Writes a header row plus one row per sample, label last, using the class
/// names. Numbers are written with round-trip precision.
void write_csv(const Dataset& data, const std::filesystem::path& path);

}  // namespace fsdem
