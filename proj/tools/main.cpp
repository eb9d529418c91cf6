// Command-line harness: ingest -> standardize -> partition -> evaluate,
// plus the end-to-end benchmark reproduction driver.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "wobbly/version.hpp"

int main(int argc, char** argv) {
    using namespace wobbly::cli;

    CLI::App app{"Wobbly Center Algorithm: deterministic anti-clustering partitioner"};
    app.set_version_flag("--version", wobbly::kVersion);
    app.require_subcommand(1);

    PartitionArgs partition_args;
    CLI::App* partition = app.add_subcommand(
        "partition", "Split a CSV dataset into k mutually representative clusters");
    partition->add_option("--input", partition_args.input, "CSV dataset")->required();
    partition->add_option("--k", partition_args.k, "Number of clusters")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    partition->add_option("--method", partition_args.method, "wobbly | random")
        ->capture_default_str();
    partition->add_option("--seed", partition_args.seed, "PRNG seed (random method)");
    partition->add_flag("--trace", partition_args.trace,
                        "Emit per-append centroid trace CSV (wobbly only)");
    partition->add_flag("--assume-standardized", partition_args.assume_standardized,
                        "Input is already z-scored; skip standardization and enforce it");
    partition->add_option("--out-dir", partition_args.out_dir, "Output directory")
        ->capture_default_str();
    add_ingest_flags(*partition, partition_args.ingest);

    EvaluateArgs evaluate_args;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Per-feature one-way ANOVA of a stored partition");
    evaluate->add_option("--input", evaluate_args.input, "CSV dataset")->required();
    evaluate->add_option("--partition", evaluate_args.partition, "partition.json")->required();
    evaluate->add_flag("--vs-population", evaluate_args.vs_population,
                       "Also test clusters against the full population");
    evaluate->add_option("--alpha", evaluate_args.alpha, "Rejection level")
        ->capture_default_str()
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
    evaluate->add_option("--report", evaluate_args.report_path, "Samples-vs-samples CSV")
        ->capture_default_str();
    evaluate->add_option("--vs-population-report", evaluate_args.vs_population_path,
                         "Samples-vs-population CSV")
        ->capture_default_str();
    evaluate->add_option("--report-json", evaluate_args.report_json_path,
                         "Optional combined JSON report");
    add_ingest_flags(*evaluate, evaluate_args.ingest);

    ReproduceArgs reproduce_args;
    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "Run both methods on a benchmark dataset and check the published claims");
    reproduce->add_option("--dataset", reproduce_args.dataset, "abalone | wine | CSV path")
        ->required();
    reproduce->add_option("--data-dir", reproduce_args.data_dir, "Benchmark dataset directory")
        ->capture_default_str();
    reproduce->add_option("--k", reproduce_args.k, "Number of clusters")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    reproduce->add_option("--seeds", reproduce_args.seeds,
                          "Baseline seed list, e.g. '1..100' or '3,5,10..20'")
        ->capture_default_str();
    reproduce->add_option("--alpha", reproduce_args.alpha, "Rejection level")
        ->capture_default_str()
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
    reproduce->add_option("--out-dir", reproduce_args.out_dir, "Output directory")
        ->capture_default_str();
    add_ingest_flags(*reproduce, reproduce_args.ingest);

    int rc = kExitOk;
    partition->callback([&] { rc = cmd_partition(partition_args); });
    evaluate->callback([&] { rc = cmd_evaluate(evaluate_args); });
    reproduce->callback([&] { rc = cmd_reproduce(reproduce_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wobbly::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return rc;
}
