#include "wobbly/stats.hpp"

#include <cmath>
#include <limits>

#include "compensated.hpp"

namespace wobbly {

namespace {

constexpr int kMaxIterations = 1000;
constexpr double kTiny = 1e-300;
constexpr double kEps = 1e-16;

// Continued fraction for I_x(a,b), modified Lentz. Converges in roughly
// sqrt(max(a,b)) iterations for x below the symmetry switch point.
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= kEps) break;
    }
    return h;
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("reg_inc_beta: a and b must be > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("reg_inc_beta: x must be in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_sf(double f, std::int64_t d1, std::int64_t d2) {
    if (d1 < 1 || d2 < 1) throw std::domain_error("f_sf: degrees of freedom must be positive");
    if (!(f >= 0.0)) throw std::domain_error("f_sf: f must be non-negative");
    if (std::isinf(f)) return 0.0;
    const double df1 = static_cast<double>(d1);
    const double df2 = static_cast<double>(d2);
    return reg_inc_beta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

double t_sf_two_sided(double t, std::int64_t df) {
    if (df < 1) throw std::domain_error("t_sf_two_sided: df must be positive");
    if (std::isinf(t)) return 0.0;
    const double nu = static_cast<double>(df);
    return reg_inc_beta(nu / 2.0, 0.5, nu / (nu + t * t));
}

AnovaResult one_way_anova(std::span<const std::vector<double>> groups) {
    const std::size_t k = groups.size();
    if (k < 2) throw std::invalid_argument("one_way_anova: need at least two groups");
    std::size_t total = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw std::invalid_argument("one_way_anova: empty group");
        total += g.size();
    }

    std::vector<double> means(k);
    detail::CompensatedSum grand;
    for (std::size_t i = 0; i < k; ++i) {
        detail::CompensatedSum sum;
        for (double v : groups[i]) {
            sum.add(v);
            grand.add(v);
        }
        means[i] = sum.total() / static_cast<double>(groups[i].size());
    }
    const double grand_mean = grand.total() / static_cast<double>(total);

    detail::CompensatedSum between;
    detail::CompensatedSum within;
    for (std::size_t i = 0; i < k; ++i) {
        const double dev = means[i] - grand_mean;
        between.add(static_cast<double>(groups[i].size()) * dev * dev);
        for (double v : groups[i]) {
            const double r = v - means[i];
            within.add(r * r);
        }
    }
    const double ss_between = between.total();
    const double ss_within = within.total();

    AnovaResult result;
    result.df_between = static_cast<std::int64_t>(k) - 1;
    result.df_within = static_cast<std::int64_t>(total) - static_cast<std::int64_t>(k);

    if (result.df_within == 0 || (ss_within == 0.0 && ss_between == 0.0)) {
        result.degenerate = true;
        result.f_stat = std::numeric_limits<double>::quiet_NaN();
        result.p_value = std::numeric_limits<double>::quiet_NaN();
        return result;
    }
    if (ss_within == 0.0) {
        // Perfect separation: means differ, no within-group spread.
        result.f_stat = std::numeric_limits<double>::infinity();
        result.p_value = 0.0;
        return result;
    }

    const double ms_between = ss_between / static_cast<double>(result.df_between);
    const double ms_within = ss_within / static_cast<double>(result.df_within);
    result.f_stat = ms_between / ms_within;
    result.p_value = f_sf(result.f_stat, result.df_between, result.df_within);
    return result;
}

TTestResult t_test_two_sample(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 2 || y.size() < 2)
        throw std::invalid_argument("t_test_two_sample: each group needs at least two values");
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());

    detail::CompensatedSum sx, sy;
    for (double v : x) sx.add(v);
    for (double v : y) sy.add(v);
    const double mx = sx.total() / nx;
    const double my = sy.total() / ny;

    detail::CompensatedSum ssx, ssy;
    for (double v : x) ssx.add((v - mx) * (v - mx));
    for (double v : y) ssy.add((v - my) * (v - my));

    const std::int64_t df = static_cast<std::int64_t>(x.size() + y.size()) - 2;
    const double pooled_var = (ssx.total() + ssy.total()) / static_cast<double>(df);

    TTestResult result;
    if (pooled_var == 0.0) {
        if (mx == my) {
            result.degenerate = true;
            result.t_stat = std::numeric_limits<double>::quiet_NaN();
            result.p_two_sided = std::numeric_limits<double>::quiet_NaN();
        } else {
            result.t_stat = mx > my ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
            result.p_two_sided = 0.0;
        }
        return result;
    }

    result.t_stat = (mx - my) / std::sqrt(pooled_var * (1.0 / nx + 1.0 / ny));
    result.p_two_sided = t_sf_two_sided(result.t_stat, df);
    return result;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::reject: return "reject";
        case Verdict::fail_to_reject: return "fail_to_reject";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

namespace {

AnovaReport evaluate_groups(const Dataset& d, const Partition& p, const AnovaConfig& cfg,
                            bool include_population) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw std::invalid_argument("alpha must be in (0, 1)");
    validate_partition(p, d.n_rows());

    AnovaReport report;
    report.alpha = cfg.alpha;
    report.rows.reserve(d.n_cols());
    for (std::size_t j = 0; j < d.n_cols(); ++j) {
        const std::vector<double> column = d.column(j);
        std::vector<std::vector<double>> groups;
        groups.reserve(p.k + (include_population ? 1 : 0));
        for (const auto& cluster : p.clusters) {
            std::vector<double> g;
            g.reserve(cluster.size());
            for (std::size_t idx : cluster) g.push_back(column[idx]);
            groups.push_back(std::move(g));
        }
        if (include_population) groups.push_back(column);

        AnovaReportRow row;
        row.column_name = d.column_names()[j];
        row.result = one_way_anova(groups);
        row.verdict = row.result.degenerate ? Verdict::degenerate
                      : row.result.p_value < cfg.alpha ? Verdict::reject
                                                       : Verdict::fail_to_reject;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace

AnovaReport evaluate_partition(const Dataset& d, const Partition& p, const AnovaConfig& cfg) {
    return evaluate_groups(d, p, cfg, false);
}

AnovaReport evaluate_vs_population(const Dataset& d, const Partition& p, const AnovaConfig& cfg) {
    return evaluate_groups(d, p, cfg, true);
}

}  // namespace wobbly
