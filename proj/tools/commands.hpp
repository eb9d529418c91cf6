#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "common.hpp"

namespace wobbly::cli {

struct PartitionArgs {
    std::string input;
    std::size_t k = 2;
    std::string method = "wobbly";
    std::optional<std::uint64_t> seed;
    bool trace = false;
    bool assume_standardized = false;
    std::string out_dir = ".";
    IngestFlags ingest;
};

struct EvaluateArgs {
    std::string input;
    std::string partition;
    bool vs_population = false;
    double alpha = 0.05;
    std::string report_path = "report.csv";
    std::string vs_population_path = "vs_population.csv";
    std::string report_json_path;  // optional
    IngestFlags ingest;
};

struct ReproduceArgs {
    std::string dataset;  // "abalone", "wine", or a CSV path
    std::string data_dir = "data";
    std::size_t k = 2;
    std::string seeds = "1..100";
    double alpha = 0.05;
    std::string out_dir = "reproduction";
    IngestFlags ingest;  // used only when dataset is a path
};

int cmd_partition(const PartitionArgs& args);
int cmd_evaluate(const EvaluateArgs& args);
int cmd_reproduce(const ReproduceArgs& args);

}  // namespace wobbly::cli
