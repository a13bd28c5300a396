#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hooklens/hook_series.hpp"

namespace hooklens {

struct EquidistributionRow {
    int n = 0;
    int a = 0;
    mpz_class exact;       // h_ℓ(a,b;n)
    double main_term = 0;  // p(n)/b
    double rel_error = 0;  // |b·exact/p(n) − 1|
};

struct EquidistributionTable {
    int ell = 1;
    int b = 1;
    int n_max = 0;
    std::vector<EquidistributionRow> rows;  // ordered by n, then a
    /// E(n) = max_a rel_error, indexed by n.
    std::vector<double> max_error;
    /// Least-squares slope of log E(n) against log n over [slope_lo, n_max];
    /// absent when fewer than two points have E(n) > 0.
    std::optional<double> slope;
    int slope_lo = 0;
};

/// Builds the table from a precomputed series (order ≥ n_max). b = 1 is allowed.
EquidistributionTable equidistribution_error_table(const HookSeries& s, int b, int n_max, int threads = 0);
/// Convenience overload that builds han_series(ell, n_max) itself.
EquidistributionTable equidistribution_error_table(int ell, int b, int n_max, int threads = 0);

/// Slope of log E against log n on [lo, hi], skipping n with E(n) = 0.
std::optional<double> log_log_slope(const std::vector<double>& error_by_n, int lo, int hi);

double median_over(const std::vector<double>& values_by_n, int lo, int hi);

/// CSV with header n,a,exact,main_term,rel_error.
void write_equidistribution_csv(std::ostream& os, const EquidistributionTable& t);

}  // namespace hooklens
