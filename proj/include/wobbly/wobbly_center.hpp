#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wobbly/dataset.hpp"
#include "wobbly/partition.hpp"

namespace wobbly {

/// One appended member: the cluster centroid immediately after the append
/// and its Euclidean distance to the population mean. iteration counts from
/// 1 (the seed) up to the cluster's final size.
struct TracePoint {
    std::size_t iteration = 0;
    std::vector<double> centroid;
    double dist_to_population_mean = 0.0;

    bool operator==(const TracePoint&) const = default;
};

struct ConvergenceTrace {
    std::vector<std::vector<TracePoint>> clusters;
    std::vector<double> population_mean;

    bool operator==(const ConvergenceTrace&) const = default;
};

/// The partitioner is scale variant, so inputs are expected standardized
/// (per-column mean within 1e-6 of 0). warn reports violations on stderr,
/// error throws DataError, ignore skips the check.
enum class ScaleCheck { ignore, warn, error };

struct WobblyOptions {
    bool trace = false;
    ScaleCheck scale_check = ScaleCheck::warn;
};

struct WobblyResult {
    Partition partition;
    std::optional<ConvergenceTrace> trace;
};

/// Arithmetic mean of all rows, one entry per column.
std::vector<double> population_mean(const Dataset& d);

/// Index in `available` minimizing / maximizing Euclidean distance to
/// target; exact distance ties break to the lowest row index.
std::size_t nearest_row(const Dataset& d, std::span<const std::size_t> available,
                        std::span<const double> target);
std::size_t farthest_row(const Dataset& d, std::span<const std::size_t> available,
                         std::span<const double> target);

/// The k rows nearest the population mean, taken greedily without
/// replacement. The mean is computed once, before the loop. The i-th index
/// seeds cluster i.
std::vector<std::size_t> select_seeds(const Dataset& d, std::size_t k);

/// Greedy anti-clustering: after seeding, clusters take turns (fixed order
/// 0..k-1) absorbing the pooled row farthest from their current centroid
/// until the pool is empty; a sweep may stop partway, leaving later clusters
/// one element smaller. Deterministic: two runs on the same inputs are
/// bit-identical.
WobblyResult wobbly_partition(const Dataset& d, std::size_t k, const WobblyOptions& options = {});

}  // namespace wobbly
