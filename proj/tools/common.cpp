#include "common.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>

namespace wobbly::cli {

IngestOptions IngestFlags::to_options() const {
    IngestOptions options;
    options.has_header = !no_header;
    options.drop_non_numeric = drop_non_numeric;
    if (na_policy == "error")
        options.na_policy = NaPolicy::error;
    else if (na_policy == "drop-row")
        options.na_policy = NaPolicy::drop_row;
    else
        throw UsageError("--na-policy must be 'error' or 'drop-row'");
    if (delimiter.size() != 1) throw UsageError("--delimiter must be a single character");
    options.delimiter = delimiter[0];
    return options;
}

void add_ingest_flags(CLI::App& cmd, IngestFlags& flags) {
    cmd.add_flag("--no-header", flags.no_header, "Input file has no header row");
    cmd.add_flag("--drop-non-numeric", flags.drop_non_numeric,
                 "Silently exclude non-numeric columns (recorded in the load report)");
    cmd.add_option("--na-policy", flags.na_policy, "Missing-value policy: error | drop-row")
        ->capture_default_str();
    cmd.add_option("--delimiter", flags.delimiter, "Field delimiter")->capture_default_str();
}

std::string sha256_hex_of_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);

    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

nlohmann::ordered_json ingest_to_json(const std::filesystem::path& input,
                                      const IngestOptions& options) {
    nlohmann::ordered_json j;
    j["path"] = input.string();
    j["sha256"] = sha256_hex_of_file(input);
    j["has_header"] = options.has_header;
    j["drop_non_numeric"] = options.drop_non_numeric;
    j["na_policy"] = options.na_policy == NaPolicy::error ? "error" : "drop-row";
    j["delimiter"] = std::string(1, options.delimiter);
    return j;
}

void write_json_file(const nlohmann::ordered_json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw DataError("write failed: " + path.string());
}

namespace {

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw UsageError("invalid seed '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_spec(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string token =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty()) throw UsageError("empty token in seed list '" + spec + "'");
        const std::size_t dots = token.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(parse_u64(token));
        } else {
            const std::uint64_t lo = parse_u64(std::string_view(token).substr(0, dots));
            const std::uint64_t hi = parse_u64(std::string_view(token).substr(dots + 2));
            if (hi < lo) throw UsageError("descending seed range '" + token + "'");
            for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (seeds.empty()) throw UsageError("empty seed list");
    return seeds;
}

}  // namespace wobbly::cli
