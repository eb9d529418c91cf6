#include <iostream>

#include "commands.hpp"
#include "wobbly/preprocess.hpp"
#include "wobbly/random_baseline.hpp"
#include "wobbly/serialization.hpp"
#include "wobbly/version.hpp"
#include "wobbly/wobbly_center.hpp"

namespace wobbly::cli {

int cmd_partition(const PartitionArgs& args) {
    if (args.method != "wobbly" && args.method != "random")
        throw UsageError("--method must be 'wobbly' or 'random'");
    if (args.method == "random" && args.trace)
        throw UsageError("--trace is only meaningful with --method wobbly");
    if (args.method == "random" && !args.seed)
        throw UsageError("--method random requires --seed");

    const IngestOptions ingest = args.ingest.to_options();
    const std::filesystem::path out_dir(args.out_dir);
    std::filesystem::create_directories(out_dir);

    LoadReport load_report;
    const Dataset raw = load_csv(args.input, ingest, &load_report);

    nlohmann::ordered_json manifest;
    manifest["tool"] = "wobbly";
    manifest["tool_version"] = kVersion;
    manifest["input"] = ingest_to_json(args.input, ingest);
    nlohmann::ordered_json run;
    run["command"] = "partition";
    run["method"] = args.method;
    run["k"] = args.k;
    if (args.seed) run["seed"] = *args.seed;
    run["trace"] = args.trace;
    run["assume_standardized"] = args.assume_standardized;
    manifest["run"] = std::move(run);
    nlohmann::ordered_json outputs;
    outputs["partition"] = "partition.json";
    outputs["load_report"] = "load_report.json";

    write_json_file(load_report_to_json(load_report), out_dir / "load_report.json");

    std::optional<Dataset> working;
    if (args.assume_standardized) {
        working = raw;
    } else {
        Standardized standardized = standardize(raw);
        save_params(standardized.params, out_dir / "standardization.json");
        outputs["standardization"] = "standardization.json";
        working = std::move(standardized.dataset);
    }

    Partition partition;
    if (args.method == "wobbly") {
        WobblyOptions options;
        options.trace = args.trace;
        // Already-scaled inputs are the caller's claim; hold them to it.
        options.scale_check = args.assume_standardized ? ScaleCheck::error : ScaleCheck::warn;
        WobblyResult result = wobbly_partition(*working, args.k, options);
        partition = std::move(result.partition);
        if (args.trace) {
            write_trace_csv(*result.trace, out_dir / "trace.csv");
            outputs["trace"] = "trace.csv";
        }
    } else {
        partition = random_partition(*working, args.k, RngSeed{*args.seed});
    }

    save_partition(partition, out_dir / "partition.json");
    manifest["outputs"] = std::move(outputs);
    write_json_file(manifest, out_dir / "manifest.json");

    std::cout << "partition.json: method=" << args.method << " k=" << args.k
              << " n=" << partition.source_n << " -> " << (out_dir / "partition.json").string()
              << "\n";
    return kExitOk;
}

}  // namespace wobbly::cli
