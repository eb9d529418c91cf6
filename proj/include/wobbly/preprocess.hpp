#pragma once

#include <vector>

#include "wobbly/dataset.hpp"

namespace wobbly {

/// Per-column z-score parameters. stds are population standard deviations
/// (divisor n) and are strictly positive for every retained column.
struct StandardizationParams {
    std::vector<double> means;
    std::vector<double> stds;

    bool operator==(const StandardizationParams&) const = default;
};

struct Standardized {
    Dataset dataset;
    StandardizationParams params;
};

/// (x - mean) / population_std per column. The output has per-column mean 0
/// and population standard deviation 1 to within 1e-9. Throws DataError for
/// constant columns and single-row datasets.
Standardized standardize(const Dataset& d);

/// Project d into the standardized space described by params.
Dataset apply_params(const Dataset& d, const StandardizationParams& params);

}  // namespace wobbly
