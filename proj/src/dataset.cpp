#include "wobbly/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <system_error>

namespace wobbly {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_missing_token(std::string_view s) {
    if (s.empty() || s == "?") return true;
    const std::string l = lower(s);
    return l == "na" || l == "nan" || l == "null";
}

bool parse_finite_double(std::string_view s, double& out) {
    // Tolerate surrounding whitespace, which from_chars does not.
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return false;
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v, std::chars_format::general);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return false;
    out = v;
    return true;
}

// One record, RFC-4180 style: quoted fields may contain the delimiter,
// doubled quotes, and embedded newlines.
bool read_record(std::istream& in, char delimiter, std::vector<std::string>& fields) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;

    std::string field;
    bool in_quotes = false;
    bool saw_any = false;
    while (true) {
        if (c == EOF) {
            fields.push_back(std::move(field));
            return true;
        }
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty() && !saw_any) {
            in_quotes = true;
        } else if (ch == delimiter) {
            fields.push_back(std::move(field));
            field.clear();
            saw_any = false;
            c = in.get();
            continue;
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            fields.push_back(std::move(field));
            return true;
        } else if (ch == '\n') {
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
            saw_any = true;
        }
        c = in.get();
    }
}

void skip_bom(std::istream& in) {
    if (in.peek() == 0xEF) {
        char bom[3];
        in.read(bom, 3);
        if (in.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF)) {
            in.seekg(0);
        }
    }
}

}  // namespace

Dataset::Dataset(std::vector<double> values, std::size_t n_rows, std::size_t n_cols,
                 std::vector<std::string> column_names, std::vector<std::size_t> row_ids)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      values_(std::move(values)),
      column_names_(std::move(column_names)),
      row_ids_(std::move(row_ids)) {
    if (n_rows_ < 1 || n_cols_ < 1) throw std::invalid_argument("Dataset: empty shape");
    if (values_.size() != n_rows_ * n_cols_)
        throw std::invalid_argument("Dataset: value count does not match shape");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("Dataset: non-finite entry");

    if (column_names_.empty()) {
        column_names_.reserve(n_cols_);
        for (std::size_t j = 0; j < n_cols_; ++j)
            column_names_.push_back("col" + std::to_string(j + 1));
    } else if (column_names_.size() != n_cols_) {
        throw std::invalid_argument("Dataset: column name count does not match shape");
    }

    if (row_ids_.empty()) {
        row_ids_.resize(n_rows_);
        std::iota(row_ids_.begin(), row_ids_.end(), std::size_t{0});
    } else if (row_ids_.size() != n_rows_) {
        throw std::invalid_argument("Dataset: row id count does not match shape");
    }
    for (std::size_t i = 1; i < row_ids_.size(); ++i)
        if (row_ids_[i - 1] >= row_ids_[i])
            throw std::invalid_argument("Dataset: row ids must be strictly ascending");
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows,
                           std::vector<std::string> column_names) {
    if (rows.empty()) throw std::invalid_argument("Dataset: no rows");
    const std::size_t n_cols = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * n_cols);
    for (const auto& r : rows) {
        if (r.size() != n_cols) throw std::invalid_argument("Dataset: ragged rows");
        values.insert(values.end(), r.begin(), r.end());
    }
    return Dataset(std::move(values), rows.size(), n_cols, std::move(column_names));
}

std::vector<double> Dataset::column(std::size_t j) const {
    if (j >= n_cols_) throw std::out_of_range("Dataset::column: index out of range");
    std::vector<double> out;
    out.reserve(n_rows_);
    for (std::size_t i = 0; i < n_rows_; ++i) out.push_back(at(i, j));
    return out;
}

Dataset load_csv(const std::filesystem::path& path, const IngestOptions& options,
                 LoadReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    skip_bom(in);

    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    while (read_record(in, options.delimiter, fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        records.push_back(fields);
    }
    if (records.empty()) throw DataError("empty file: " + path.string());

    std::vector<std::string> names;
    std::size_t first_data = 0;
    const std::size_t file_cols = records[0].size();
    if (options.has_header) {
        names = records[0];
        first_data = 1;
        for (std::size_t j = 0; j < names.size(); ++j)
            if (names[j].empty()) names[j] = "col" + std::to_string(j + 1);
    } else {
        for (std::size_t j = 0; j < file_cols; ++j) names.push_back("col" + std::to_string(j + 1));
    }
    if (records.size() == first_data) throw DataError("no data rows in " + path.string());

    for (std::size_t i = first_data; i < records.size(); ++i)
        if (records[i].size() != file_cols)
            throw DataError("ragged row " + std::to_string(i - first_data) + " in " +
                            path.string() + ": expected " + std::to_string(file_cols) +
                            " fields, got " + std::to_string(records[i].size()));

    // A column is numeric when every non-missing cell parses as a finite real.
    std::vector<bool> numeric(file_cols, true);
    for (std::size_t i = first_data; i < records.size(); ++i) {
        for (std::size_t j = 0; j < file_cols; ++j) {
            if (!numeric[j]) continue;
            const std::string& cell = records[i][j];
            double v;
            if (!is_missing_token(cell) && !parse_finite_double(cell, v)) numeric[j] = false;
        }
    }

    LoadReport rep;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < file_cols; ++j) {
        if (numeric[j]) {
            keep.push_back(j);
        } else if (options.drop_non_numeric) {
            rep.dropped_columns.push_back(names[j]);
        } else {
            throw DataError("non-numeric column '" + names[j] + "' in " + path.string() +
                            " (pass drop_non_numeric to exclude it)");
        }
    }
    if (keep.empty()) throw DataError("no numeric columns in " + path.string());

    std::vector<double> values;
    values.reserve((records.size() - first_data) * keep.size());
    std::vector<std::size_t> row_ids;
    for (std::size_t i = first_data; i < records.size(); ++i) {
        const std::size_t data_row = i - first_data;
        std::vector<double> parsed(keep.size());
        bool missing = false;
        std::size_t missing_col = 0;
        for (std::size_t jj = 0; jj < keep.size(); ++jj) {
            const std::string& cell = records[i][keep[jj]];
            if (is_missing_token(cell) || !parse_finite_double(cell, parsed[jj])) {
                missing = true;
                missing_col = keep[jj];
                break;
            }
        }
        if (missing) {
            if (options.na_policy == NaPolicy::error)
                throw DataError("missing value at data row " + std::to_string(data_row) +
                                ", column '" + names[missing_col] + "' in " + path.string());
            rep.dropped_rows.push_back(data_row);
            continue;
        }
        values.insert(values.end(), parsed.begin(), parsed.end());
        row_ids.push_back(data_row);
    }
    if (row_ids.empty()) throw DataError("all rows dropped from " + path.string());

    std::vector<std::string> kept_names;
    for (std::size_t j : keep) kept_names.push_back(names[j]);

    const std::size_t out_rows = row_ids.size();
    const std::size_t out_cols = keep.size();
    Dataset d(std::move(values), out_rows, out_cols, std::move(kept_names), std::move(row_ids));
    rep.n_rows = d.n_rows();
    rep.n_cols = d.n_cols();
    if (report) *report = rep;
    return d;
}

namespace {

std::string shortest_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

bool needs_quoting(const std::string& s, char delimiter) {
    return s.find(delimiter) != std::string::npos || s.find('"') != std::string::npos ||
           s.find('\n') != std::string::npos || s.find('\r') != std::string::npos;
}

std::string csv_field(const std::string& s, char delimiter) {
    if (!needs_quoting(s, delimiter)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_csv(const Dataset& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    for (std::size_t j = 0; j < d.n_cols(); ++j) {
        if (j) out << ',';
        out << csv_field(d.column_names()[j], ',');
    }
    out << '\n';
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        for (std::size_t j = 0; j < d.n_cols(); ++j) {
            if (j) out << ',';
            out << shortest_double(d.at(i, j));
        }
        out << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace wobbly
