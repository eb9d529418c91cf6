#include "wobbly/random_baseline.hpp"

#include <numeric>

#include "wobbly/rng.hpp"

namespace wobbly {

Partition random_partition(const Dataset& d, std::size_t k, RngSeed seed) {
    const std::size_t n = d.n_rows();
    if (k < 2 || k > n)
        throw std::invalid_argument("random_partition: k must be in [2, n_rows], got " +
                                    std::to_string(k));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    Xoshiro256StarStar rng(seed.value);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(order[i], order[j]);
    }

    Partition p;
    p.method = PartitionMethod::random;
    p.k = k;
    p.source_n = n;
    p.seed = seed.value;
    p.clusters.resize(k);
    for (std::size_t i = 0; i < k; ++i) p.clusters[i].reserve(n / k + 1);
    for (std::size_t t = 0; t < n; ++t) p.clusters[t % k].push_back(order[t]);
    return p;
}

}  // namespace wobbly
