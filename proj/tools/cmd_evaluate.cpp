#include <iostream>

#include "commands.hpp"
#include "wobbly/serialization.hpp"
#include "wobbly/stats.hpp"

namespace wobbly::cli {

namespace {

std::size_t count_verdicts(const AnovaReport& report, Verdict v) {
    std::size_t n = 0;
    for (const auto& row : report.rows)
        if (row.verdict == v) ++n;
    return n;
}

void print_summary(const std::string& label, const std::string& method,
                   const AnovaReport& report) {
    std::cout << label << " [method=" << method << "]: reject=" << count_verdicts(report, Verdict::reject)
              << " fail_to_reject=" << count_verdicts(report, Verdict::fail_to_reject)
              << " degenerate=" << count_verdicts(report, Verdict::degenerate)
              << " (alpha=" << format_sig7(report.alpha) << ")\n";
}

}  // namespace

int cmd_evaluate(const EvaluateArgs& args) {
    const IngestOptions ingest = args.ingest.to_options();
    const Dataset d = load_csv(args.input, ingest);
    const Partition partition = load_partition(args.partition);
    validate_partition(partition, d.n_rows());

    // The F statistic is location-scale invariant per feature, so evaluating
    // the raw values gives the same p as evaluating standardized ones.
    const AnovaConfig cfg{args.alpha};
    const AnovaReport report = evaluate_partition(d, partition, cfg);
    write_report_csv(report, args.report_path);
    std::cout << "wrote " << args.report_path << "\n";
    print_summary("samples-vs-samples", to_string(partition.method), report);

    if (args.vs_population) {
        const AnovaReport vs_pop = evaluate_vs_population(d, partition, cfg);
        write_report_csv(vs_pop, args.vs_population_path);
        std::cout << "wrote " << args.vs_population_path << "\n";
        print_summary("samples-vs-population", to_string(partition.method), vs_pop);
    }

    if (!args.report_json_path.empty()) {
        nlohmann::ordered_json j;
        j["input"] = ingest_to_json(args.input, ingest);
        j["partition"] = args.partition;
        j["samples_vs_samples"] = report_to_json(report);
        if (args.vs_population)
            j["samples_vs_population"] =
                report_to_json(evaluate_vs_population(d, partition, cfg));
        write_json_file(j, args.report_json_path);
        std::cout << "wrote " << args.report_json_path << "\n";
    }

    nlohmann::ordered_json manifest;
    manifest["tool"] = "wobbly";
    manifest["tool_version"] = kVersion;
    manifest["input"] = ingest_to_json(args.input, ingest);
    nlohmann::ordered_json run;
    run["command"] = "evaluate";
    run["partition"] = args.partition;
    run["partition_sha256"] = sha256_hex_of_file(args.partition);
    run["alpha"] = args.alpha;
    run["vs_population"] = args.vs_population;
    manifest["run"] = std::move(run);
    nlohmann::ordered_json outputs;
    outputs["report"] = args.report_path;
    if (args.vs_population) outputs["vs_population_report"] = args.vs_population_path;
    if (!args.report_json_path.empty()) outputs["report_json"] = args.report_json_path;
    manifest["outputs"] = std::move(outputs);
    write_json_file(manifest, args.report_path + ".manifest.json");
    return kExitOk;
}

}  // namespace wobbly::cli
