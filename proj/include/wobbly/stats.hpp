#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wobbly/dataset.hpp"
#include "wobbly/partition.hpp"

namespace wobbly {

/// Regularized incomplete beta I_x(a, b), a,b > 0, x in [0, 1]. Continued
/// fraction (modified Lentz) with the symmetry switch at x = (a+1)/(a+b+2);
/// absolute error <= 1e-12 for a, b up to 1e4. Throws std::domain_error.
double reg_inc_beta(double a, double b, double x);

/// F-distribution survival function P(F_{d1,d2} > f)
///   = I_{d2/(d2 + d1*f)}(d2/2, d1/2).
double f_sf(double f, std::int64_t d1, std::int64_t d2);

/// Two-sided tail probability of Student's t with df degrees of freedom,
///   P(|T| > t) = I_{df/(df + t^2)}(df/2, 1/2).
double t_sf_two_sided(double t, std::int64_t df);

struct AnovaResult {
    double f_stat = 0.0;
    std::int64_t df_between = 0;
    std::int64_t df_within = 0;
    double p_value = 1.0;
    /// F is 0/0 (no variance anywhere) or df_within is 0; f_stat and
    /// p_value are NaN in that case.
    bool degenerate = false;
};

/// One-way ANOVA over >= 2 non-empty groups: F = MS_between / MS_within,
/// p from f_sf. All-identical input and df_within == 0 come back as an
/// explicit degenerate result rather than p = 1; a silent 1 would mask data
/// errors. Zero within-variance with separated means gives F = inf, p = 0.
AnovaResult one_way_anova(std::span<const std::vector<double>> groups);

struct TTestResult {
    double t_stat = 0.0;
    double p_two_sided = 1.0;
    bool degenerate = false;  // zero pooled variance with equal means
};

/// Pooled-variance (equal variance) Student's t, two-sided p with
/// n_x + n_y - 2 degrees of freedom. At k = 2 the ANOVA p equals this p.
TTestResult t_test_two_sample(std::span<const double> x, std::span<const double> y);

struct AnovaConfig {
    double alpha = 0.05;
};

enum class Verdict { reject, fail_to_reject, degenerate };

std::string to_string(Verdict v);

struct AnovaReportRow {
    std::string column_name;
    AnovaResult result;
    Verdict verdict = Verdict::fail_to_reject;
};

/// Per-feature ANOVA table; verdict is reject iff p < alpha. Degenerate
/// columns are reported in place, they never abort the rest of the report.
struct AnovaReport {
    double alpha = 0.05;
    std::vector<AnovaReportRow> rows;
};

/// Are the clusters statistically indistinguishable from one another?
/// Groups = the k clusters' values, one ANOVA per column.
AnovaReport evaluate_partition(const Dataset& d, const Partition& p, const AnovaConfig& cfg = {});

/// Are the clusters indistinguishable from the original population? Groups =
/// the k clusters' values plus the full population as one extra group (the
/// overlap is inherent to the hypothesis as stated).
AnovaReport evaluate_vs_population(const Dataset& d, const Partition& p,
                                   const AnovaConfig& cfg = {});

}  // namespace wobbly
