#include "wobbly/serialization.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace wobbly {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_sig7(double v) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof(buf), "%.7g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

namespace {

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void write_json_file(const nlohmann::ordered_json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace

nlohmann::ordered_json partition_to_json(const Partition& p) {
    nlohmann::ordered_json j;
    j["method"] = to_string(p.method);
    j["k"] = p.k;
    if (p.seed) j["seed"] = *p.seed;
    j["source_n"] = p.source_n;
    j["clusters"] = p.clusters;
    return j;
}

Partition partition_from_json(const nlohmann::json& j) {
    Partition p;
    try {
        p.method = partition_method_from_string(j.at("method").get<std::string>());
        p.k = j.at("k").get<std::size_t>();
        p.source_n = j.at("source_n").get<std::size_t>();
        p.clusters = j.at("clusters").get<std::vector<std::vector<std::size_t>>>();
        if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed partition JSON: ") + e.what());
    }
    return p;
}

void save_partition(const Partition& p, const std::filesystem::path& path) {
    write_json_file(partition_to_json(p), path);
}

Partition load_partition(const std::filesystem::path& path) {
    return partition_from_json(read_json_file(path));
}

nlohmann::ordered_json params_to_json(const StandardizationParams& params) {
    nlohmann::ordered_json j;
    j["means"] = params.means;
    j["stds"] = params.stds;
    return j;
}

StandardizationParams params_from_json(const nlohmann::json& j) {
    StandardizationParams params;
    try {
        params.means = j.at("means").get<std::vector<double>>();
        params.stds = j.at("stds").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed standardization JSON: ") + e.what());
    }
    if (params.means.size() != params.stds.size())
        throw DataError("malformed standardization JSON: means/stds length mismatch");
    return params;
}

void save_params(const StandardizationParams& params, const std::filesystem::path& path) {
    write_json_file(params_to_json(params), path);
}

StandardizationParams load_params(const std::filesystem::path& path) {
    return params_from_json(read_json_file(path));
}

nlohmann::ordered_json load_report_to_json(const LoadReport& report) {
    nlohmann::ordered_json j;
    j["n_rows"] = report.n_rows;
    j["n_cols"] = report.n_cols;
    j["dropped_columns"] = report.dropped_columns;
    j["dropped_rows"] = report.dropped_rows;
    return j;
}

void write_trace_csv(const ConvergenceTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << "cluster,iteration,dim,centroid_value,dist_to_pop_mean\n";
    for (std::size_t c = 0; c < trace.clusters.size(); ++c) {
        for (const TracePoint& point : trace.clusters[c]) {
            const std::string dist = format_double(point.dist_to_population_mean);
            for (std::size_t dim = 0; dim < point.centroid.size(); ++dim) {
                out << (c + 1) << ',' << point.iteration << ',' << dim << ','
                    << format_double(point.centroid[dim]) << ',' << dist << '\n';
            }
        }
    }
    if (!out) throw DataError("write failed: " + path.string());
}

void write_report_csv(const AnovaReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << "attribute,F,df1,df2,p,verdict\n";
    for (const AnovaReportRow& row : report.rows) {
        out << row.column_name << ',';
        if (!row.result.degenerate) out << format_sig7(row.result.f_stat);
        out << ',' << row.result.df_between << ',' << row.result.df_within << ',';
        if (!row.result.degenerate) out << format_sig7(row.result.p_value);
        out << ',' << to_string(row.verdict) << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

nlohmann::ordered_json report_to_json(const AnovaReport& report) {
    nlohmann::ordered_json j;
    j["alpha"] = report.alpha;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const AnovaReportRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["attribute"] = row.column_name;
        if (row.result.degenerate) {
            r["F"] = nullptr;
            r["p"] = nullptr;
        } else {
            r["F"] = row.result.f_stat;
            r["p"] = row.result.p_value;
        }
        r["df1"] = row.result.df_between;
        r["df2"] = row.result.df_within;
        r["verdict"] = to_string(row.verdict);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace wobbly
