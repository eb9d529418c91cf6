#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "wobbly/preprocess.hpp"
#include "wobbly/wobbly_center.hpp"

using namespace wobbly;

namespace {

Dataset points_1d(const std::vector<double>& values) {
    std::vector<std::vector<double>> rows;
    for (double v : values) rows.push_back({v});
    return Dataset::from_rows(rows);
}

const std::vector<std::size_t> kAll{0, 1, 2, 3, 4};

Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
    for (auto& r : rows)
        for (auto& v : r) v = value(rng);
    return Dataset::from_rows(rows);
}

std::vector<double> cluster_mean(const Dataset& d, const std::vector<std::size_t>& cluster) {
    std::vector<double> mean(d.n_cols(), 0.0);
    for (std::size_t idx : cluster) {
        const auto row = d.row(idx);
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += row[j];
    }
    for (double& m : mean) m /= static_cast<double>(cluster.size());
    return mean;
}

}  // namespace

TEST_CASE("population_mean") {
    CHECK(population_mean(Dataset::from_rows({{0, 0}, {2, 2}})) == std::vector<double>{1, 1});
    CHECK(population_mean(Dataset::from_rows({{3, 7}})) == std::vector<double>{3, 7});

    std::mt19937_64 rng(3);
    const Dataset standardized = standardize(random_dataset(rng, 200, 3)).dataset;
    for (double m : population_mean(standardized)) CHECK(std::abs(m) < 1e-9);
}

TEST_CASE("nearest_row picks the closest index, ties to the lowest index") {
    const Dataset d = points_1d({-2, -1, 0, 1, 2});
    const std::vector<double> target{0.0};
    CHECK(nearest_row(d, kAll, target) == 2);

    const std::vector<std::size_t> no_center{0, 1, 3, 4};
    CHECK(nearest_row(d, no_center, target) == 1);  // distance 1 ties with index 3

    const Dataset d2 = Dataset::from_rows({{0, 0}, {3, 4}, {1, 1}});
    CHECK(nearest_row(d2, std::vector<std::size_t>{0, 1, 2}, std::vector<double>{0, 0}) == 0);

    CHECK_THROWS_AS(nearest_row(d, std::vector<std::size_t>{}, target), std::invalid_argument);
    CHECK_THROWS_AS(nearest_row(d, kAll, std::vector<double>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(nearest_row(d, std::vector<std::size_t>{9}, target), std::out_of_range);
}

TEST_CASE("farthest_row picks the remotest index, ties to the lowest index") {
    const Dataset d = points_1d({-2, -1, 0, 1, 2});
    const std::vector<double> target{0.0};
    const std::vector<std::size_t> pool{0, 3, 4};
    CHECK(farthest_row(d, pool, target) == 0);  // distance 2 ties with index 4

    const Dataset d2 = Dataset::from_rows({{0, 0}, {3, 4}, {1, 1}});
    CHECK(farthest_row(d2, std::vector<std::size_t>{0, 1, 2}, std::vector<double>{0, 0}) == 1);

    CHECK(farthest_row(d, std::vector<std::size_t>{3}, target) == 3);
}

TEST_CASE("select_seeds takes rows nearest the fixed population mean") {
    const Dataset d = points_1d({-2, -1, 0, 1, 2});
    CHECK(select_seeds(d, 2) == std::vector<std::size_t>{2, 1});
    CHECK(select_seeds(d, 1) == std::vector<std::size_t>{2});
    // k = n: ascending distance to the mean, index breaking ties
    CHECK(select_seeds(d, 5) == std::vector<std::size_t>{2, 1, 3, 0, 4});
    CHECK_THROWS_AS(select_seeds(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(select_seeds(d, 6), std::invalid_argument);
}

TEST_CASE("wobbly_partition reproduces the hand-simulated 5-point run") {
    const Dataset d = points_1d({-2, -1, 0, 1, 2});
    const WobblyResult result = wobbly_partition(d, 2, {.trace = true});
    const Partition& p = result.partition;
    CHECK(p.method == PartitionMethod::wobbly);
    CHECK(p.k == 2);
    CHECK(p.source_n == 5);
    CHECK(p.clusters[0] == std::vector<std::size_t>{2, 0, 3});
    CHECK(p.clusters[1] == std::vector<std::size_t>{1, 4});
    validate_partition(p, 5);

    REQUIRE(result.trace.has_value());
    const ConvergenceTrace& trace = *result.trace;
    REQUIRE(trace.clusters.size() == 2);
    CHECK(trace.clusters[0].size() == 3);
    CHECK(trace.clusters[1].size() == 2);
    CHECK(trace.clusters[0][0].iteration == 1);
    CHECK(trace.clusters[0][0].centroid == std::vector<double>{0.0});
    CHECK(trace.clusters[0][1].centroid == std::vector<double>{-1.0});  // mean of {0, -2}
    CHECK(trace.clusters[1][1].centroid == std::vector<double>{0.5});   // mean of {-1, 2}
}

TEST_CASE("k = n gives singleton clusters in seed order") {
    const Dataset d = points_1d({-2, -1, 0, 1, 2});
    const Partition p = wobbly_partition(d, 5).partition;
    CHECK(p.clusters == std::vector<std::vector<std::size_t>>{{2}, {1}, {3}, {0}, {4}});
}

TEST_CASE("k out of range") {
    const Dataset d = points_1d({-2, -1, 0, 1, 2});
    CHECK_THROWS_AS(wobbly_partition(d, 1), std::invalid_argument);
    CHECK_THROWS_AS(wobbly_partition(d, 6), std::invalid_argument);
}

TEST_CASE("scale check flags clearly unstandardized input") {
    const Dataset d = points_1d({100, 101, 102, 103});
    CHECK_THROWS_AS(wobbly_partition(d, 2, {.scale_check = ScaleCheck::error}), DataError);
    CHECK_NOTHROW(wobbly_partition(d, 2, {.scale_check = ScaleCheck::ignore}));
}

TEST_CASE("interleaved duplicate points split into two mirror clusters") {
    // Generic-position points, each present twice; the clusters end up with
    // one copy each, so both final centroids equal the population mean.
    const std::vector<std::vector<double>> base{
        {0.31, -1.27}, {1.83, 0.44}, {-0.92, 0.61}, {0.07, 2.05}, {-1.4, -0.33}};
    std::vector<std::vector<double>> rows;
    for (const auto& r : base) {
        rows.push_back(r);
        rows.push_back(r);
    }
    const Dataset d = Dataset::from_rows(rows);
    const Partition p = wobbly_partition(d, 2, {.scale_check = ScaleCheck::ignore}).partition;
    CHECK(p.clusters[0].size() == 5);
    CHECK(p.clusters[1].size() == 5);

    const std::vector<double> pop = population_mean(d);
    for (const auto& cluster : p.clusters) {
        const std::vector<double> mean = cluster_mean(d, cluster);
        double dist2 = 0.0;
        for (std::size_t j = 0; j < mean.size(); ++j)
            dist2 += (mean[j] - pop[j]) * (mean[j] - pop[j]);
        CHECK(std::sqrt(dist2) < 1e-9);
    }
}

TEST_CASE("structural invariants and determinism on random datasets") {
    std::mt19937_64 rng(20240812);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 120;
        const std::size_t dim = 1 + rng() % 4;
        const Dataset d = random_dataset(rng, n, dim);
        for (std::size_t k : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
            if (k > n) continue;
            const WobblyOptions options{.trace = true, .scale_check = ScaleCheck::ignore};
            const WobblyResult a = wobbly_partition(d, k, options);
            const WobblyResult b = wobbly_partition(d, k, options);
            CHECK(a.partition == b.partition);
            CHECK(*a.trace == *b.trace);
            validate_partition(a.partition, n);

            // Trace length equals cluster size, and every recorded centroid
            // matches a from-scratch mean of the members so far.
            for (std::size_t c = 0; c < k; ++c) {
                const auto& cluster = a.partition.clusters[c];
                const auto& points = a.trace->clusters[c];
                REQUIRE(points.size() == cluster.size());
                for (std::size_t t = 0; t < points.size(); ++t) {
                    CHECK(points[t].iteration == t + 1);
                    const std::vector<std::size_t> prefix(cluster.begin(),
                                                          cluster.begin() + t + 1);
                    const std::vector<double> expected = cluster_mean(d, prefix);
                    for (std::size_t j = 0; j < expected.size(); ++j)
                        CHECK(points[t].centroid[j] ==
                              doctest::Approx(expected[j]).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("relabeling rows permutes the partition when no ties occur") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 12 + rng() % 20;
        const Dataset d = random_dataset(rng, n, 2);

        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);  // new_index -> old_index

        std::vector<std::vector<double>> permuted_rows(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = d.row(perm[i]);
            permuted_rows[i].assign(row.begin(), row.end());
        }
        const Dataset permuted = Dataset::from_rows(permuted_rows);

        std::vector<std::size_t> inverse(n);
        for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = i;

        const WobblyOptions options{.scale_check = ScaleCheck::ignore};
        const Partition original = wobbly_partition(d, 2, options).partition;
        const Partition relabeled = wobbly_partition(permuted, 2, options).partition;

        std::vector<std::vector<std::size_t>> mapped(original.clusters.size());
        for (std::size_t c = 0; c < original.clusters.size(); ++c)
            for (std::size_t idx : original.clusters[c]) mapped[c].push_back(inverse[idx]);
        CHECK(mapped == relabeled.clusters);
    }
}
