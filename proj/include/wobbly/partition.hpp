#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wobbly {

enum class PartitionMethod { wobbly, random };

std::string to_string(PartitionMethod m);
PartitionMethod partition_method_from_string(const std::string& s);

/// k disjoint row-index lists, in insertion order, covering 0..source_n-1.
/// Sizes differ by at most one and earlier clusters are never smaller than
/// later ones.
struct Partition {
    PartitionMethod method = PartitionMethod::wobbly;
    std::size_t k = 0;
    std::size_t source_n = 0;
    std::vector<std::vector<std::size_t>> clusters;
    std::optional<std::uint64_t> seed;  // set when method == random

    bool operator==(const Partition&) const = default;
};

/// Checks exhaustiveness, disjointness and the <=1 size-balance rule against
/// a dataset of n_rows rows. Throws DataError on any violation; run on every
/// partition loaded from disk.
void validate_partition(const Partition& p, std::size_t n_rows);

}  // namespace wobbly
