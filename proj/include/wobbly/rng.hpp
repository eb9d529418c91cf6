#pragma once

#include <cstdint>

namespace wobbly {

/// xoshiro256** with splitmix64 seeding. The algorithm is fixed here rather
/// than taken from the platform so published seeds reproduce the same stream
/// on any machine.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform integer in [0, bound), bound >= 1, by rejection sampling
    /// (no modulo bias).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_[4];
};

}  // namespace wobbly
