#include "fsdem/data/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "fsdem/core/error.hpp"

namespace fsdem {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

[[noreturn]] void format_error(std::size_t line, std::size_t column, const std::string& what) {
    fail(ErrorCode::format,
         "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::string location(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string describe(const std::string& name, std::size_t index) {
    return "column " + std::to_string(index + 1) + " (" + name + ")";
}

std::string format_number(double v) {
    std::ostringstream out;
    out.precision(std::numeric_limits<double>::max_digits10);
    out << v;
    return out.str();
}

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::optional<double> parse_number(std::string_view cell) {
    cell = trim(cell);
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    if (cell.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::vector<CsvRecord> parse_csv(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<CsvRecord> records;
    CsvRecord current;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool after_closing_quote = false;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t quote_line = 0;
    std::size_t quote_column = 0;
    current.line = 1;

    const auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        after_closing_quote = false;
    };
    const auto end_record = [&](std::size_t next_line) {
        const bool blank = current.fields.empty() && trim(field).empty() && !field_was_quoted;
        end_field();
        if (!blank) records.push_back(std::move(current));
        current = CsvRecord{};
        current.line = next_line;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                    ++column;
                } else {
                    in_quotes = false;
                    after_closing_quote = true;
                }
            } else {
                field += c;
                if (c == '\n') {
                    ++line;
                    column = 0;
                }
            }
            ++column;
            continue;
        }
        if (c == ',') {
            end_field();
        } else if (c == '\r' || c == '\n') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            ++line;
            end_record(line);
            column = 0;
        } else if (c == '"') {
            if (!trim(field).empty() || field_was_quoted) {
                format_error(line, column, "unexpected quote inside an unquoted field");
            }
            field.clear();
            in_quotes = true;
            field_was_quoted = true;
            quote_line = line;
            quote_column = column;
        } else {
            if (after_closing_quote && c != ' ' && c != '\t') {
                format_error(line, column, "unexpected character after closing quote");
            }
            if (!after_closing_quote) field += c;
        }
        ++column;
    }
    if (in_quotes) format_error(quote_line, quote_column, "unterminated quoted field");
    if (!field.empty() || field_was_quoted || !current.fields.empty()) end_record(line + 1);
    return records;
}

Dataset load_csv(const std::filesystem::path& path, const ColumnSpec& spec) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) fail(ErrorCode::io, "failed reading " + path.string());
    try {
        return load_csv_text(buffer.str(), spec,
                             spec.dataset_id.empty() ? path.stem().string() : spec.dataset_id);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

Dataset load_csv_text(std::string_view text, const ColumnSpec& spec, std::string dataset_id) {
    auto records = parse_csv(text);
    if (records.empty()) fail(ErrorCode::format, "file holds no records");

    const std::size_t width = records.front().fields.size();
    for (const auto& rec : records) {
        if (rec.fields.size() != width) {
            format_error(rec.line, std::min(rec.fields.size(), width) + 1,
                         "expected " + std::to_string(width) + " fields, found " +
                             std::to_string(rec.fields.size()));
        }
    }
    if (width < 2) fail(ErrorCode::format, "need at least one feature column and a label column");

    const auto is_missing = [&](const std::string& cell) {
        return spec.missing_markers.count(std::string(trim(cell))) > 0;
    };

    // A column is numeric when every non-missing cell below the first row parses.
    std::vector<bool> numeric_below(width, true);
    for (std::size_t r = 1; r < records.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            const auto& cell = records[r].fields[c];
            if (numeric_below[c] && !is_missing(cell) && !parse_number(cell)) numeric_below[c] = false;
        }
    }
    bool has_header = false;
    if (spec.header) {
        has_header = *spec.header;
    } else if (records.size() >= 2) {
        for (std::size_t c = 0; c < width; ++c) {
            const auto& cell = records.front().fields[c];
            if (numeric_below[c] && !is_missing(cell) && !parse_number(cell)) has_header = true;
        }
    }

    std::vector<std::string> names(width);
    for (std::size_t c = 0; c < width; ++c) {
        names[c] = has_header ? std::string(trim(records.front().fields[c])) : "x" + std::to_string(c);
    }
    const std::size_t first_data = has_header ? 1 : 0;
    if (records.size() <= first_data) fail(ErrorCode::format, "file holds no data rows");
    const std::size_t n = records.size() - first_data;

    std::size_t label_col = width - 1;
    if (const auto* name = std::get_if<std::string>(&spec.label_column)) {
        const auto it = std::find(names.begin(), names.end(), *name);
        if (!has_header || it == names.end()) {
            fail(ErrorCode::ingestion, "label column '" + *name + "' not found");
        }
        label_col = static_cast<std::size_t>(it - names.begin());
    } else if (const auto* index = std::get_if<std::size_t>(&spec.label_column)) {
        if (*index >= width) {
            fail(ErrorCode::ingestion, "label column index " + std::to_string(*index) +
                                           " outside " + std::to_string(width) + " columns");
        }
        label_col = *index;
    }

    std::vector<std::size_t> feature_cols;
    for (std::size_t c = 0; c < width; ++c) {
        if (c != label_col) feature_cols.push_back(c);
    }

    Matrix x(n, feature_cols.size());
    std::vector<std::string> feature_names;
    for (std::size_t j = 0; j < feature_cols.size(); ++j) {
        const std::size_t c = feature_cols[j];
        feature_names.push_back(names[c]);
        bool categorical = spec.categorical_indices.count(c) > 0 ||
                           spec.categorical_names.count(names[c]) > 0;

        std::vector<std::optional<std::string>> cells(n);
        for (std::size_t r = 0; r < n; ++r) {
            const auto& cell = records[first_data + r].fields[c];
            if (is_missing(cell)) continue;
            cells[r] = std::string(trim(cell));
            if (!parse_number(*cells[r])) categorical = true;
        }
        if (std::none_of(cells.begin(), cells.end(), [](const auto& v) { return v.has_value(); })) {
            fail(ErrorCode::ingestion, describe(names[c], c) + " has only missing values");
        }

        if (categorical) {
            std::map<std::string, std::size_t> frequency;
            for (const auto& v : cells) {
                if (v) ++frequency[*v];
            }
            std::map<std::string, double> code;
            double next = 0.0;
            for (const auto& [category, count] : frequency) code[category] = next++;
            // Mode with ties resolved towards the smallest category text.
            const auto mode = std::max_element(
                frequency.begin(), frequency.end(),
                [](const auto& l, const auto& r) { return l.second < r.second; });
            for (std::size_t r = 0; r < n; ++r) {
                x(r, j) = code[cells[r] ? *cells[r] : mode->first];
            }
        } else {
            std::vector<double> present;
            for (const auto& v : cells) {
                if (v) present.push_back(*parse_number(*v));
            }
            std::sort(present.begin(), present.end());
            const std::size_t m = present.size();
            const double median =
                m % 2 == 1 ? present[m / 2] : 0.5 * (present[m / 2 - 1] + present[m / 2]);
            for (std::size_t r = 0; r < n; ++r) {
                x(r, j) = cells[r] ? *parse_number(*cells[r]) : median;
            }
        }
    }

    std::map<std::string, int> label_code;
    for (std::size_t r = 0; r < n; ++r) {
        const auto& rec = records[first_data + r];
        const auto& cell = rec.fields[label_col];
        if (is_missing(cell)) {
            fail(ErrorCode::ingestion, "missing label at " + location(rec.line, label_col + 1));
        }
        label_code.emplace(std::string(trim(cell)), 0);
    }
    std::vector<std::string> class_names;
    for (auto& [label, code] : label_code) {
        code = static_cast<int>(class_names.size());
        class_names.push_back(label);
    }
    std::vector<int> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        y[r] = label_code.at(std::string(trim(records[first_data + r].fields[label_col])));
    }

    return Dataset(std::move(x), std::move(y), std::move(feature_names), std::move(dataset_id),
                   std::move(class_names));
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write " + path.string());
    for (const auto& name : data.feature_names()) out << quote_if_needed(name) << ',';
    out << "class\n";
    for (std::size_t r = 0; r < data.rows(); ++r) {
        for (double v : data.x().row(r)) out << format_number(v) << ',';
        out << quote_if_needed(data.class_names()[static_cast<std::size_t>(data.y()[r])]) << '\n';
    }
    if (!out) fail(ErrorCode::io, "failed writing " + path.string());
}

}  // namespace fsdem
