#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wobbly {

/// Raised for unreadable or malformed input data (files, partitions, columns).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class NaPolicy { error, drop_row };

struct IngestOptions {
    bool has_header = true;
    bool drop_non_numeric = false;
    NaPolicy na_policy = NaPolicy::error;
    char delimiter = ',';
};

/// What ingestion kept and what it threw away.
struct LoadReport {
    std::vector<std::string> dropped_columns;
    std::vector<std::size_t> dropped_rows;  // 0-based data-row positions in the file
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
};

/// Immutable numeric feature matrix with row identifiers and column names.
///
/// Row order is file order. row_ids are 0-based data-row positions by
/// default; they stay attached to their rows when ingestion drops rows, so
/// they are strictly ascending but not necessarily contiguous. All entries
/// are finite. Safe for concurrent reads.
class Dataset {
public:
    Dataset(std::vector<double> values, std::size_t n_rows, std::size_t n_cols,
            std::vector<std::string> column_names = {},
            std::vector<std::size_t> row_ids = {});

    static Dataset from_rows(const std::vector<std::vector<double>>& rows,
                             std::vector<std::string> column_names = {});

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * n_cols_, n_cols_};
    }
    double at(std::size_t i, std::size_t j) const { return values_[i * n_cols_ + j]; }

    /// Values of column j in row order. Throws std::out_of_range.
    std::vector<double> column(std::size_t j) const;

    const std::vector<std::string>& column_names() const { return column_names_; }
    const std::vector<std::size_t>& row_ids() const { return row_ids_; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const Dataset&) const = default;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<double> values_;  // row-major
    std::vector<std::string> column_names_;
    std::vector<std::size_t> row_ids_;
};

/// Load a delimited text file, keeping only numeric columns.
///
/// Columns whose non-missing cells all parse as finite reals are numeric;
/// any other column is an error unless options.drop_non_numeric is set, in
/// which case it is excluded and recorded in the report. Missing cells
/// ("", "?", "na", "nan", "null", case-insensitive) in numeric columns
/// follow options.na_policy. Ragged rows are always an error.
Dataset load_csv(const std::filesystem::path& path, const IngestOptions& options = {},
                 LoadReport* report = nullptr);

/// Write header + values; numbers use shortest round-trip formatting so a
/// reload reproduces the Dataset exactly.
void write_csv(const Dataset& d, const std::filesystem::path& path);

}  // namespace wobbly
