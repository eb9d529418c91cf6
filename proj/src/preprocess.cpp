#include "wobbly/preprocess.hpp"

#include <cmath>

#include "compensated.hpp"

namespace wobbly {

Standardized standardize(const Dataset& d) {
    if (d.n_rows() < 2)
        throw DataError("standardize: need at least two rows, got " + std::to_string(d.n_rows()));

    const std::size_t n = d.n_rows();
    const std::size_t cols = d.n_cols();
    StandardizationParams params;
    params.means.resize(cols);
    params.stds.resize(cols);

    for (std::size_t j = 0; j < cols; ++j) {
        detail::CompensatedSum sum;
        for (std::size_t i = 0; i < n; ++i) sum.add(d.at(i, j));
        const double mean = sum.total() / static_cast<double>(n);

        detail::CompensatedSum sq;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = d.at(i, j) - mean;
            sq.add(dev * dev);
        }
        const double var = sq.total() / static_cast<double>(n);
        const double sd = std::sqrt(var);
        if (!(sd > 0.0))
            throw DataError("standardize: constant column '" + d.column_names()[j] + "'");
        params.means[j] = mean;
        params.stds[j] = sd;
    }

    return {apply_params(d, params), std::move(params)};
}

Dataset apply_params(const Dataset& d, const StandardizationParams& params) {
    if (params.means.size() != d.n_cols() || params.stds.size() != d.n_cols())
        throw std::invalid_argument("apply_params: parameter/column count mismatch");
    for (double sd : params.stds)
        if (!(sd > 0.0)) throw std::invalid_argument("apply_params: non-positive std");

    std::vector<double> values;
    values.reserve(d.n_rows() * d.n_cols());
    for (std::size_t i = 0; i < d.n_rows(); ++i)
        for (std::size_t j = 0; j < d.n_cols(); ++j)
            values.push_back((d.at(i, j) - params.means[j]) / params.stds[j]);

    return Dataset(std::move(values), d.n_rows(), d.n_cols(), d.column_names(),
                   d.row_ids());
}

}  // namespace wobbly
