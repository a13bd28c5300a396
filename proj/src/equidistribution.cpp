#include "hooklens/equidistribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hooklens/partition_oracle.hpp"

namespace hooklens {

namespace {

// Shortest round-trip representation, independent of locale and stream state.
std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

EquidistributionTable equidistribution_error_table(const HookSeries& s, int b, int n_max, int threads)
{
    if (b < 1) {
        throw std::invalid_argument("modulus must be at least 1");
    }
    if (n_max < 0 || n_max > s.order) {
        throw std::invalid_argument("n_max must lie in [0, series order]");
    }
    EquidistributionTable t;
    t.ell = s.ell;
    t.b = b;
    t.n_max = n_max;
    t.max_error.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

    std::vector<std::vector<mpz_class>> by_residue;
    if (b == 1) {
        std::vector<mpz_class> all(static_cast<std::size_t>(s.order) + 1);
        for (std::size_t n = 0; n < all.size(); ++n) {
            all[n] = s.coeffs[n].at_one();
        }
        by_residue.push_back(std::move(all));
    } else {
        for (int a = 0; a < b; ++a) {
            by_residue.push_back(residue_filter_exact(s, b, a, threads));
        }
    }

    const auto p = partition_numbers(n_max);
    for (int n = 0; n <= n_max; ++n) {
        const mpz_class& pn = p[static_cast<std::size_t>(n)];
        mpq_class share(pn, mpz_class(b));
        share.canonicalize();
        const double main = share.get_d();
        for (int a = 0; a < b; ++a) {
            EquidistributionRow row;
            row.n = n;
            row.a = a;
            row.exact = by_residue[static_cast<std::size_t>(a)][static_cast<std::size_t>(n)];
            row.main_term = main;
            mpq_class dev(mpz_class(row.exact * b - pn), pn);
            dev.canonicalize();
            row.rel_error = std::abs(dev.get_d());
            t.max_error[static_cast<std::size_t>(n)] = std::max(t.max_error[static_cast<std::size_t>(n)], row.rel_error);
            t.rows.push_back(std::move(row));
        }
    }
    t.slope_lo = std::max(1, n_max / 2);
    t.slope = log_log_slope(t.max_error, t.slope_lo, n_max);
    return t;
}

EquidistributionTable equidistribution_error_table(int ell, int b, int n_max, int threads)
{
    SeriesOptions opts;
    opts.threads = threads;
    return equidistribution_error_table(han_series(ell, std::max(1, n_max), opts), b, n_max, threads);
}

std::optional<double> log_log_slope(const std::vector<double>& error_by_n, int lo, int hi)
{
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    int count = 0;
    for (int n = std::max(lo, 1); n <= hi && n < static_cast<int>(error_by_n.size()); ++n) {
        const double e = error_by_n[static_cast<std::size_t>(n)];
        if (!(e > 0.0)) {
            continue;
        }
        const double x = std::log(double(n));
        const double y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) {
        return std::nullopt;
    }
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) {
        return std::nullopt;
    }
    return (count * sxy - sx * sy) / denom;
}

double median_over(const std::vector<double>& values_by_n, int lo, int hi)
{
    if (lo < 0 || hi < lo || hi >= static_cast<int>(values_by_n.size())) {
        throw std::out_of_range("median_over: range outside the table");
    }
    std::vector<double> v(values_by_n.begin() + lo, values_by_n.begin() + hi + 1);
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return (v.size() % 2 == 1) ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

void write_equidistribution_csv(std::ostream& os, const EquidistributionTable& t)
{
    os << "n,a,exact,main_term,rel_error\n";
    for (const auto& r : t.rows) {
        os << r.n << ',' << r.a << ',' << r.exact.get_str() << ',' << format_double(r.main_term) << ','
           << format_double(r.rel_error) << '\n';
    }
}

}  // namespace hooklens
