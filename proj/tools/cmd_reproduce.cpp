#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "commands.hpp"
#include "wobbly/preprocess.hpp"
#include "wobbly/random_baseline.hpp"
#include "wobbly/serialization.hpp"
#include "wobbly/stats.hpp"
#include "wobbly/version.hpp"
#include "wobbly/wobbly_center.hpp"

namespace wobbly::cli {

namespace {

constexpr double kMinWobblyP = 0.90;       // reproduction target: uniformly high p
constexpr double kContrastFraction = 0.95; // share of seeds the baseline must lose

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

}  // namespace

int cmd_reproduce(const ReproduceArgs& args) {
    std::filesystem::path input;
    IngestOptions ingest;
    bool contrast_checks = false;  // the baseline-contrast claim is tied to Abalone
    if (args.dataset == "abalone") {
        input = std::filesystem::path(args.data_dir) / "abalone.csv";
        ingest.has_header = true;
        ingest.drop_non_numeric = true;
        contrast_checks = true;
    } else if (args.dataset == "wine") {
        input = std::filesystem::path(args.data_dir) / "wine.csv";
        ingest.has_header = true;
    } else {
        input = args.dataset;
        ingest = args.ingest.to_options();
    }
    if (!std::filesystem::exists(input))
        throw DataError("dataset file " + input.string() +
                        " not found; run scripts/fetch_datasets.sh to download it");

    const std::vector<std::uint64_t> seeds = parse_seed_spec(args.seeds);
    const std::filesystem::path out_dir(args.out_dir);
    std::filesystem::create_directories(out_dir);

    LoadReport load_report;
    const Dataset raw = load_csv(input, ingest, &load_report);
    write_json_file(load_report_to_json(load_report), out_dir / "load_report.json");

    Standardized standardized = standardize(raw);
    save_params(standardized.params, out_dir / "standardization.json");
    const Dataset& d = standardized.dataset;

    WobblyOptions options;
    options.trace = true;
    options.scale_check = ScaleCheck::error;
    const WobblyResult wobbly = wobbly_partition(d, args.k, options);
    save_partition(wobbly.partition, out_dir / "partition.json");
    write_trace_csv(*wobbly.trace, out_dir / "trace.csv");

    const AnovaConfig cfg{args.alpha};
    const AnovaReport wobbly_report = evaluate_partition(d, wobbly.partition, cfg);
    write_report_csv(wobbly_report, out_dir / "wobbly_report.csv");

    const std::size_t n_attrs = wobbly_report.rows.size();
    bool wobbly_degenerate = false;
    double wobbly_min_p = std::numeric_limits<double>::infinity();
    std::size_t wobbly_rejections = 0;
    for (const auto& row : wobbly_report.rows) {
        if (row.verdict == Verdict::degenerate) wobbly_degenerate = true;
        else wobbly_min_p = std::min(wobbly_min_p, row.result.p_value);
        if (row.verdict == Verdict::reject) ++wobbly_rejections;
    }

    // Seed sweep for the random baseline, aggregated in seed order.
    std::vector<std::vector<double>> random_p(n_attrs);  // per attribute, per seed
    std::vector<double> seed_min_p(seeds.size());
    std::size_t rejecting_seeds = 0;
    std::ofstream sweep(out_dir / "random_sweep.csv", std::ios::binary);
    if (!sweep) throw DataError("cannot write file: " + (out_dir / "random_sweep.csv").string());
    sweep << "seed,attribute,p,verdict\n";
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        const Partition rp = random_partition(d, args.k, RngSeed{seeds[s]});
        const AnovaReport report = evaluate_partition(d, rp, cfg);
        double min_p = std::numeric_limits<double>::infinity();
        bool rejected = false;
        for (std::size_t a = 0; a < n_attrs; ++a) {
            const auto& row = report.rows[a];
            sweep << seeds[s] << ',' << row.column_name << ','
                  << (row.result.degenerate ? "" : format_sig7(row.result.p_value)) << ','
                  << to_string(row.verdict) << '\n';
            if (!row.result.degenerate) {
                random_p[a].push_back(row.result.p_value);
                min_p = std::min(min_p, row.result.p_value);
            }
            if (row.verdict == Verdict::reject) rejected = true;
        }
        seed_min_p[s] = min_p;
        if (rejected) ++rejecting_seeds;
    }
    sweep.close();

    // Side-by-side table; the random column is the median over the sweep.
    std::ofstream comparison(out_dir / "comparison.csv", std::ios::binary);
    if (!comparison) throw DataError("cannot write comparison.csv");
    comparison << "Attribute,Random Sampling,Wobbly Center Algorithm\n";
    std::cout << "\n  " << std::left << std::setw(28) << "Attribute" << std::setw(18)
              << "Random Sampling" << "Wobbly Center Algorithm\n";
    for (std::size_t a = 0; a < n_attrs; ++a) {
        const auto& row = wobbly_report.rows[a];
        const std::string random_cell =
            random_p[a].empty() ? "" : format_sig7(median(random_p[a]));
        const std::string wobbly_cell =
            row.result.degenerate ? "" : format_sig7(row.result.p_value);
        comparison << row.column_name << ',' << random_cell << ',' << wobbly_cell << '\n';
        std::cout << "  " << std::left << std::setw(28) << row.column_name << std::setw(18)
                  << random_cell << wobbly_cell << "\n";
    }
    comparison.close();
    std::cout << "  (Random Sampling column: median p over " << seeds.size() << " seeds)\n\n";

    std::vector<Check> checks;
    checks.push_back({"wobbly_all_p_at_least_" + format_sig7(kMinWobblyP),
                      !wobbly_degenerate && wobbly_min_p >= kMinWobblyP,
                      "min wobbly p = " + format_sig7(wobbly_min_p)});
    checks.push_back({"wobbly_zero_rejections", wobbly_rejections == 0,
                      std::to_string(wobbly_rejections) + " rejected at alpha=" +
                          format_sig7(args.alpha)});
    if (contrast_checks && seeds.size() >= 2) {
        std::size_t below = 0;
        for (double mp : seed_min_p)
            if (mp < wobbly_min_p) ++below;
        const auto needed =
            static_cast<std::size_t>(std::ceil(kContrastFraction * static_cast<double>(seeds.size())));
        checks.push_back({"random_min_p_below_wobbly_min_p_in_95pct_of_seeds", below >= needed,
                          std::to_string(below) + "/" + std::to_string(seeds.size()) +
                              " seeds (need " + std::to_string(needed) + ")"});
        checks.push_back({"at_least_one_random_rejection", rejecting_seeds >= 1,
                          std::to_string(rejecting_seeds) + " seeds rejected >=1 attribute"});
    }

    bool all_pass = true;
    for (const Check& check : checks) {
        all_pass = all_pass && check.pass;
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << " — " << check.detail
                  << "\n";
    }
    std::cout << (all_pass ? "PASS" : "FAIL") << " overall\n";

    nlohmann::ordered_json summary;
    summary["dataset"] = args.dataset;
    summary["input"] = ingest_to_json(input, ingest);
    summary["k"] = args.k;
    summary["alpha"] = args.alpha;
    summary["seeds"] = seeds;
    nlohmann::ordered_json attrs = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < n_attrs; ++a) {
        nlohmann::ordered_json row;
        row["attribute"] = wobbly_report.rows[a].column_name;
        row["wobbly_p"] = wobbly_report.rows[a].result.degenerate
                              ? nlohmann::ordered_json(nullptr)
                              : nlohmann::ordered_json(wobbly_report.rows[a].result.p_value);
        row["random_p_min"] = random_p[a].empty()
                                  ? nlohmann::ordered_json(nullptr)
                                  : nlohmann::ordered_json(
                                        *std::min_element(random_p[a].begin(), random_p[a].end()));
        row["random_p_median"] = random_p[a].empty()
                                     ? nlohmann::ordered_json(nullptr)
                                     : nlohmann::ordered_json(median(random_p[a]));
        attrs.push_back(std::move(row));
    }
    summary["attributes"] = std::move(attrs);
    summary["wobbly_min_p"] = wobbly_min_p;
    summary["wobbly_rejections"] = wobbly_rejections;
    summary["random_rejecting_seeds"] = rejecting_seeds;
    summary["seed_min_p"] = seed_min_p;
    nlohmann::ordered_json jchecks = nlohmann::ordered_json::array();
    for (const Check& check : checks) {
        nlohmann::ordered_json c;
        c["name"] = check.name;
        c["pass"] = check.pass;
        c["detail"] = check.detail;
        jchecks.push_back(std::move(c));
    }
    summary["checks"] = std::move(jchecks);
    summary["pass"] = all_pass;
    write_json_file(summary, out_dir / "summary.json");

    nlohmann::ordered_json manifest;
    manifest["tool"] = "wobbly";
    manifest["tool_version"] = kVersion;
    manifest["input"] = summary["input"];
    nlohmann::ordered_json run;
    run["command"] = "reproduce";
    run["dataset"] = args.dataset;
    run["k"] = args.k;
    run["seeds"] = args.seeds;
    run["alpha"] = args.alpha;
    manifest["run"] = std::move(run);
    manifest["outputs"] = {{"partition", "partition.json"},
                           {"trace", "trace.csv"},
                           {"standardization", "standardization.json"},
                           {"load_report", "load_report.json"},
                           {"wobbly_report", "wobbly_report.csv"},
                           {"random_sweep", "random_sweep.csv"},
                           {"comparison", "comparison.csv"},
                           {"summary", "summary.json"}};
    write_json_file(manifest, out_dir / "manifest.json");

    return all_pass ? kExitOk : kExitAcceptance;
}

}  // namespace wobbly::cli
