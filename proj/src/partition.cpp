#include "wobbly/partition.hpp"

#include <algorithm>

#include "wobbly/dataset.hpp"

namespace wobbly {

std::string to_string(PartitionMethod m) {
    return m == PartitionMethod::wobbly ? "wobbly" : "random";
}

PartitionMethod partition_method_from_string(const std::string& s) {
    if (s == "wobbly") return PartitionMethod::wobbly;
    if (s == "random") return PartitionMethod::random;
    throw DataError("unknown partition method '" + s + "'");
}

void validate_partition(const Partition& p, std::size_t n_rows) {
    if (p.k < 2) throw DataError("partition: k must be at least 2");
    if (p.clusters.size() != p.k) throw DataError("partition: cluster count does not match k");
    if (p.source_n != n_rows)
        throw DataError("partition: source_n " + std::to_string(p.source_n) +
                        " does not match dataset rows " + std::to_string(n_rows));

    std::vector<char> seen(n_rows, 0);
    std::size_t total = 0;
    for (const auto& cluster : p.clusters) {
        for (std::size_t idx : cluster) {
            if (idx >= n_rows)
                throw DataError("partition: row index " + std::to_string(idx) + " out of range");
            if (seen[idx]) throw DataError("partition: row index " + std::to_string(idx) +
                                           " appears in more than one cluster");
            seen[idx] = 1;
            ++total;
        }
    }
    if (total != n_rows) throw DataError("partition: clusters do not cover all rows");

    std::size_t min_size = n_rows, max_size = 0;
    for (const auto& cluster : p.clusters) {
        min_size = std::min(min_size, cluster.size());
        max_size = std::max(max_size, cluster.size());
    }
    if (max_size - min_size > 1) throw DataError("partition: cluster sizes differ by more than 1");
    for (std::size_t i = 1; i < p.clusters.size(); ++i)
        if (p.clusters[i - 1].size() < p.clusters[i].size())
            throw DataError("partition: cluster " + std::to_string(i) +
                            " is larger than an earlier cluster");
}

}  // namespace wobbly
