#pragma once

#include <cmath>

namespace wobbly::detail {

// Neumaier-compensated running sum. Additions are applied left to right so
// results are order-stable and reproducible across runs.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double total() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace wobbly::detail
