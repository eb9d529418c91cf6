#include <doctest.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "wobbly/serialization.hpp"

using namespace wobbly;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("partition JSON uses the documented shape") {
    Partition p;
    p.method = PartitionMethod::wobbly;
    p.k = 2;
    p.source_n = 5;
    p.clusters = {{2, 0, 3}, {1, 4}};
    CHECK(partition_to_json(p).dump() ==
          R"({"method":"wobbly","k":2,"source_n":5,"clusters":[[2,0,3],[1,4]]})");

    p.method = PartitionMethod::random;
    p.seed = 42;
    CHECK(partition_to_json(p).dump() ==
          R"({"method":"random","k":2,"seed":42,"source_n":5,"clusters":[[2,0,3],[1,4]]})");
}

TEST_CASE("partition JSON round-trips through disk") {
    Partition p;
    p.method = PartitionMethod::random;
    p.k = 3;
    p.source_n = 7;
    p.seed = 1234567890123ULL;
    p.clusters = {{0, 3, 6}, {1, 4}, {2, 5}};
    const auto path = temp_file("wobbly_partition.json");
    save_partition(p, path);
    CHECK(load_partition(path) == p);
}

TEST_CASE("malformed partition JSON is a data error") {
    const auto path = temp_file("wobbly_bad_partition.json");
    {
        std::ofstream out(path);
        out << R"({"method":"sideways","k":2,"source_n":2,"clusters":[[0],[1]]})";
    }
    CHECK_THROWS_AS(load_partition(path), DataError);
    {
        std::ofstream out(path);
        out << R"({"k":2})";
    }
    CHECK_THROWS_AS(load_partition(path), DataError);
    {
        std::ofstream out(path);
        out << "not json";
    }
    CHECK_THROWS_AS(load_partition(path), DataError);
}

TEST_CASE("standardization params JSON") {
    const StandardizationParams params{{1.5, -2.0}, {0.5, 3.0}};
    CHECK(params_to_json(params).dump() == R"({"means":[1.5,-2.0],"stds":[0.5,3.0]})");
    const auto path = temp_file("wobbly_params.json");
    save_params(params, path);
    CHECK(load_params(path) == params);

    {
        std::ofstream out(path);
        out << R"({"means":[1.0],"stds":[1.0,2.0]})";
    }
    CHECK_THROWS_AS(load_params(path), DataError);
}

TEST_CASE("report CSV layout") {
    AnovaReport report;
    report.alpha = 0.05;
    AnovaReportRow ok;
    ok.column_name = "length";
    ok.result = {0.0016368, 1, 4175, 0.9677423, false};
    ok.verdict = Verdict::fail_to_reject;
    AnovaReportRow degenerate;
    degenerate.column_name = "flat";
    degenerate.result.degenerate = true;
    degenerate.result.df_between = 1;
    degenerate.result.df_within = 0;
    degenerate.verdict = Verdict::degenerate;
    report.rows = {ok, degenerate};

    const auto path = temp_file("wobbly_report.csv");
    write_report_csv(report, path);
    CHECK(slurp(path) ==
          "attribute,F,df1,df2,p,verdict\n"
          "length,0.0016368,1,4175,0.9677423,fail_to_reject\n"
          "flat,,1,0,,degenerate\n");
}

TEST_CASE("trace CSV layout") {
    ConvergenceTrace trace;
    trace.population_mean = {0.0, 0.0};
    trace.clusters.resize(2);
    trace.clusters[0].push_back({1, {0.5, -0.5}, 0.25});
    trace.clusters[1].push_back({1, {1.0, 2.0}, 2.0});

    const auto path = temp_file("wobbly_trace.csv");
    write_trace_csv(trace, path);
    CHECK(slurp(path) ==
          "cluster,iteration,dim,centroid_value,dist_to_pop_mean\n"
          "1,1,0,0.5,0.25\n"
          "1,1,1,-0.5,0.25\n"
          "2,1,0,1,2\n"
          "2,1,1,2,2\n");
}

TEST_CASE("number formatting") {
    SUBCASE("format_double survives a parse round-trip") {
        for (double v : {0.1, -1.0 / 3.0, 1e300, 4177.0, 0.9939368}) {
            const std::string s = format_double(v);
            double parsed = 0.0;
            std::from_chars(s.data(), s.data() + s.size(), parsed);
            CHECK(parsed == v);
        }
    }
    SUBCASE("format_sig7 keeps seven significant digits") {
        CHECK(format_sig7(0.99393684321) == "0.9939368");
        CHECK(format_sig7(8.0) == "8");
        CHECK(format_sig7(0.000123456789) == "0.0001234568");
    }
}
