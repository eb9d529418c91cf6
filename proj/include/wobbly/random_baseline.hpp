#pragma once

#include <cstdint>

#include "wobbly/dataset.hpp"
#include "wobbly/partition.hpp"

namespace wobbly {

/// Seed for the fixed PRNG stream (see rng.hpp): same seed, same partition,
/// forever.
struct RngSeed {
    std::uint64_t value = 0;
};

/// Sampling without replacement into k groups: a seeded Fisher-Yates shuffle
/// of the row indices, dealt round-robin into k clusters. Sizes differ by at
/// most one, earlier clusters take the remainder. Pure function of
/// (d, k, seed).
Partition random_partition(const Dataset& d, std::size_t k, RngSeed seed);

}  // namespace wobbly
