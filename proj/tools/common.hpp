#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wobbly/dataset.hpp"

namespace wobbly::cli {

// Exit codes: 0 success, 1 usage, 2 data error, 3 acceptance failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitAcceptance = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IngestFlags {
    bool no_header = false;
    bool drop_non_numeric = false;
    std::string na_policy = "error";
    std::string delimiter = ",";

    IngestOptions to_options() const;
};

/// Registers --no-header, --drop-non-numeric, --na-policy, --delimiter.
void add_ingest_flags(CLI::App& cmd, IngestFlags& flags);

std::string sha256_hex_of_file(const std::filesystem::path& path);

nlohmann::ordered_json ingest_to_json(const std::filesystem::path& input,
                                      const IngestOptions& options);

void write_json_file(const nlohmann::ordered_json& j, const std::filesystem::path& path);

/// "1..100" or "3,7,1..4" -> expanded list, order preserved.
std::vector<std::uint64_t> parse_seed_spec(const std::string& spec);

}  // namespace wobbly::cli
