#include <doctest.h>

#include <fstream>
#include <random>

#include "wobbly/dataset.hpp"

using namespace wobbly;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("load_csv parses a header CSV in file order") {
    const auto path = write_temp("wobbly_basic.csv", "a,b\n1,2\n3,4\n");
    const Dataset d = load_csv(path);
    CHECK(d.n_rows() == 2);
    CHECK(d.n_cols() == 2);
    CHECK(d.at(0, 0) == 1.0);
    CHECK(d.at(0, 1) == 2.0);
    CHECK(d.at(1, 0) == 3.0);
    CHECK(d.at(1, 1) == 4.0);
    CHECK(d.column_names() == std::vector<std::string>{"a", "b"});
    CHECK(d.row_ids() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("load_csv without header generates positional names") {
    const auto path = write_temp("wobbly_nohdr.csv", "1,2\n3,4\n");
    IngestOptions options;
    options.has_header = false;
    const Dataset d = load_csv(path, options);
    CHECK(d.column_names() == std::vector<std::string>{"col1", "col2"});
    CHECK(d.n_rows() == 2);
}

TEST_CASE("drop_non_numeric excludes text columns and names them in the report") {
    const auto path = write_temp("wobbly_mixed.csv", "x,sex,y\n1,M,2\n3,F,4\n");
    IngestOptions options;
    options.drop_non_numeric = true;
    LoadReport report;
    const Dataset d = load_csv(path, options, &report);
    CHECK(d.n_cols() == 2);
    CHECK(d.column_names() == std::vector<std::string>{"x", "y"});
    CHECK(report.dropped_columns == std::vector<std::string>{"sex"});
    CHECK(report.n_rows == 2);
    CHECK(report.n_cols == 2);
}

TEST_CASE("non-numeric column without drop_non_numeric is an error") {
    const auto path = write_temp("wobbly_mixed2.csv", "x,sex\n1,M\n3,F\n");
    CHECK_THROWS_AS(load_csv(path), DataError);
}

TEST_CASE("missing values follow the NA policy") {
    const auto path = write_temp("wobbly_na.csv", "x,y\n1,2\n?,4\n5,6\n");
    SUBCASE("error policy fails loudly") {
        CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("data row 1"), DataError);
    }
    SUBCASE("drop_row keeps original row ids") {
        IngestOptions options;
        options.na_policy = NaPolicy::drop_row;
        LoadReport report;
        const Dataset d = load_csv(path, options, &report);
        CHECK(d.n_rows() == 2);
        CHECK(d.row_ids() == std::vector<std::size_t>{0, 2});
        CHECK(report.dropped_rows == std::vector<std::size_t>{1});
    }
}

TEST_CASE("ragged rows are always an error") {
    const auto path = write_temp("wobbly_ragged.csv", "a,b\n1,2\n3\n");
    CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("ragged"), DataError);
}

TEST_CASE("a file with no numeric columns is an error") {
    const auto path = write_temp("wobbly_text.csv", "s,t\nM,x\nF,y\n");
    IngestOptions options;
    options.drop_non_numeric = true;
    CHECK_THROWS_WITH_AS(load_csv(path, options), doctest::Contains("no numeric"), DataError);
}

TEST_CASE("unreadable files are an error") {
    CHECK_THROWS_AS(load_csv("/nonexistent/wobbly.csv"), DataError);
}

TEST_CASE("quoted fields may contain the delimiter") {
    const auto path = write_temp("wobbly_quoted.csv", "\"a,1\",b\n1,2\n");
    const Dataset d = load_csv(path);
    CHECK(d.column_names()[0] == "a,1");
    CHECK(d.at(0, 1) == 2.0);
}

TEST_CASE("custom delimiter") {
    const auto path = write_temp("wobbly_semi.csv", "a;b\n1;2\n");
    IngestOptions options;
    options.delimiter = ';';
    const Dataset d = load_csv(path, options);
    CHECK(d.n_cols() == 2);
    CHECK(d.at(0, 0) == 1.0);
}

TEST_CASE("column extraction") {
    const Dataset d = Dataset::from_rows({{1, 2}, {3, 4}});
    CHECK(d.column(0) == std::vector<double>{1, 3});
    CHECK(d.column(1) == std::vector<double>{2, 4});
    CHECK(Dataset::from_rows({{7}}).column(0) == std::vector<double>{7});
    CHECK_THROWS_AS(d.column(2), std::out_of_range);
}

TEST_CASE("dataset construction rejects bad shapes") {
    CHECK_THROWS_AS(Dataset::from_rows({}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset::from_rows({{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset::from_rows({{1, std::nan("")}}), std::invalid_argument);
}

TEST_CASE("write_csv then load_csv round-trips exactly") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> value(-1e6, 1e6);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        const std::size_t cols = 1 + rng() % 5;
        std::vector<std::vector<double>> rows(n, std::vector<double>(cols));
        for (auto& r : rows)
            for (auto& v : r) v = value(rng);
        const Dataset d = Dataset::from_rows(rows);

        const auto path = write_temp("wobbly_roundtrip.csv", "");
        write_csv(d, path);
        const Dataset reloaded = load_csv(path);
        CHECK(reloaded == d);
    }
}
