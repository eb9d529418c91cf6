#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wobbly/dataset.hpp"
#include "wobbly/partition.hpp"
#include "wobbly/preprocess.hpp"
#include "wobbly/stats.hpp"
#include "wobbly/wobbly_center.hpp"

namespace wobbly {

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

/// 7 significant digits, the precision used in the report tables.
std::string format_sig7(double v);

// {"method":"wobbly","k":2,"source_n":5,"clusters":[[...],[...]]}, plus
// "seed" when method is random.
nlohmann::ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);
void save_partition(const Partition& p, const std::filesystem::path& path);
Partition load_partition(const std::filesystem::path& path);

// {"means":[...],"stds":[...]}
nlohmann::ordered_json params_to_json(const StandardizationParams& params);
StandardizationParams params_from_json(const nlohmann::json& j);
void save_params(const StandardizationParams& params, const std::filesystem::path& path);
StandardizationParams load_params(const std::filesystem::path& path);

nlohmann::ordered_json load_report_to_json(const LoadReport& report);

/// Long-form, plot-ready CSV:
/// cluster,iteration,dim,centroid_value,dist_to_pop_mean with 1-based
/// cluster and iteration and 0-based dim.
void write_trace_csv(const ConvergenceTrace& trace, const std::filesystem::path& path);

/// attribute,F,df1,df2,p,verdict — one row per feature; degenerate rows
/// leave F and p empty.
void write_report_csv(const AnovaReport& report, const std::filesystem::path& path);
nlohmann::ordered_json report_to_json(const AnovaReport& report);

}  // namespace wobbly
