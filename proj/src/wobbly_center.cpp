#include "wobbly/wobbly_center.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace wobbly {

namespace {

// Squared distances compare the same as true distances; ties are exact
// double equality, no epsilon, so results do not drift across platforms.
double squared_distance(std::span<const double> row, std::span<const double> target) {
    double acc = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        const double diff = row[j] - target[j];
        acc += diff * diff;
    }
    return acc;
}

enum class Extreme { nearest, farthest };

// Single left-to-right scan; on a distance tie the lowest row index wins
// regardless of pool order.
std::size_t scan_pool(const Dataset& d, std::span<const std::size_t> pool,
                      std::span<const double> target, Extreme mode) {
    std::size_t best = pool.front();
    double best_dist = squared_distance(d.row(best), target);
    for (std::size_t t = 1; t < pool.size(); ++t) {
        const std::size_t idx = pool[t];
        const double dist = squared_distance(d.row(idx), target);
        const bool better = mode == Extreme::nearest ? dist < best_dist : dist > best_dist;
        if (better || (dist == best_dist && idx < best)) {
            best = idx;
            best_dist = dist;
        }
    }
    return best;
}

void check_args(const Dataset& d, std::span<const std::size_t> available,
                std::span<const double> target) {
    if (available.empty()) throw std::invalid_argument("available set is empty");
    if (target.size() != d.n_cols())
        throw std::invalid_argument("target dimension does not match dataset columns");
    for (std::size_t idx : available)
        if (idx >= d.n_rows()) throw std::out_of_range("row index out of range");
}

void erase_index(std::vector<std::size_t>& pool, std::size_t idx) {
    pool.erase(std::find(pool.begin(), pool.end(), idx));
}

}  // namespace

std::vector<double> population_mean(const Dataset& d) {
    const std::size_t n = d.n_rows();
    std::vector<double> mean(d.n_cols(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = d.row(i);
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += row[j];
    }
    for (double& m : mean) m /= static_cast<double>(n);
    return mean;
}

std::size_t nearest_row(const Dataset& d, std::span<const std::size_t> available,
                        std::span<const double> target) {
    check_args(d, available, target);
    return scan_pool(d, available, target, Extreme::nearest);
}

std::size_t farthest_row(const Dataset& d, std::span<const std::size_t> available,
                         std::span<const double> target) {
    check_args(d, available, target);
    return scan_pool(d, available, target, Extreme::farthest);
}

std::vector<std::size_t> select_seeds(const Dataset& d, std::size_t k) {
    if (k < 1 || k > d.n_rows())
        throw std::invalid_argument("select_seeds: k must be in [1, n_rows], got " +
                                    std::to_string(k));
    const std::vector<double> mean = population_mean(d);

    std::vector<std::size_t> pool(d.n_rows());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

    std::vector<std::size_t> seeds;
    seeds.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t idx = scan_pool(d, pool, mean, Extreme::nearest);
        seeds.push_back(idx);
        erase_index(pool, idx);
    }
    return seeds;
}

WobblyResult wobbly_partition(const Dataset& d, std::size_t k, const WobblyOptions& options) {
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_cols();
    if (k < 2 || k > n)
        throw std::invalid_argument("wobbly_partition: k must be in [2, n_rows], got " +
                                    std::to_string(k));

    const std::vector<double> pop_mean = population_mean(d);
    if (options.scale_check != ScaleCheck::ignore) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (std::abs(pop_mean[j]) > 1e-6) {
                const std::string msg = "wobbly_partition: column '" + d.column_names()[j] +
                                        "' has mean " + std::to_string(pop_mean[j]) +
                                        "; input does not look standardized";
                if (options.scale_check == ScaleCheck::error) throw DataError(msg);
                std::cerr << "warning: " << msg << "\n";
                break;
            }
        }
    }

    Partition partition;
    partition.method = PartitionMethod::wobbly;
    partition.k = k;
    partition.source_n = n;
    partition.clusters.resize(k);

    ConvergenceTrace trace;
    if (options.trace) {
        trace.clusters.resize(k);
        trace.population_mean = pop_mean;
    }

    // Running per-cluster sums; centroid = sum / size. Summation follows
    // insertion order, so it matches a from-scratch mean bit for bit.
    std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));

    auto append = [&](std::size_t cluster, std::size_t idx) {
        partition.clusters[cluster].push_back(idx);
        const auto row = d.row(idx);
        auto& sum = sums[cluster];
        for (std::size_t j = 0; j < dim; ++j) sum[j] += row[j];
        if (options.trace) {
            const double size = static_cast<double>(partition.clusters[cluster].size());
            TracePoint point;
            point.iteration = partition.clusters[cluster].size();
            point.centroid.resize(dim);
            double dist2 = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                point.centroid[j] = sum[j] / size;
                const double diff = point.centroid[j] - pop_mean[j];
                dist2 += diff * diff;
            }
            point.dist_to_population_mean = std::sqrt(dist2);
            trace.clusters[cluster].push_back(std::move(point));
        }
    };

    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;

    // Seeding: k rows nearest the population mean, which is fixed for the
    // whole seed loop.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t idx = scan_pool(d, pool, pop_mean, Extreme::nearest);
        append(i, idx);
        erase_index(pool, idx);
    }

    // Assignment rounds: fixed cluster order, centroid recomputed before
    // each pick, sweep stops as soon as the pool runs dry.
    std::vector<double> centroid(dim);
    while (!pool.empty()) {
        for (std::size_t i = 0; i < k && !pool.empty(); ++i) {
            const double size = static_cast<double>(partition.clusters[i].size());
            for (std::size_t j = 0; j < dim; ++j) centroid[j] = sums[i][j] / size;
            const std::size_t idx = scan_pool(d, pool, centroid, Extreme::farthest);
            append(i, idx);
            erase_index(pool, idx);
        }
    }

    WobblyResult result;
    result.partition = std::move(partition);
    if (options.trace) result.trace = std::move(trace);
    return result;
}

}  // namespace wobbly
