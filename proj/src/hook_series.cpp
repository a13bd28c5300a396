#include "hooklens/hook_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hooklens/parallel.hpp"
#include "hooklens/series_kernels.hpp"

namespace hooklens {

namespace {

void check_order(int ell, int order, std::size_t budget)
{
    if (ell < 1) {
        throw std::invalid_argument("ell must be positive");
    }
    if (order < 1) {
        throw std::invalid_argument("series order must be positive");
    }
    if (std::size_t need = estimate_series_bytes(ell, order); need > budget) {
        throw std::length_error("series order " + std::to_string(order) + " needs about " +
                                std::to_string(need) + " bytes, over the budget of " +
                                std::to_string(budget));
    }
}

template <typename NumFn, typename DenFn>
HookSeries build(int ell, int order, NumFn&& numerator, DenFn&& denominator)
{
    HookSeries s{ell, order, std::vector<ZetaPoly>(static_cast<std::size_t>(order) + 1)};
    s.coeffs[0] = ZetaPoly{1};
    const auto terms = kernels::numerator_binomial(ell);
    // Factors with ℓn > order cannot reach the truncation.
    for (int k = 1; static_cast<long>(ell) * k <= order; ++k) {
        numerator(s.coeffs, static_cast<std::size_t>(ell) * static_cast<std::size_t>(k), terms);
    }
    for (int k = 1; k <= order; ++k) {
        denominator(s.coeffs, static_cast<std::size_t>(k));
    }
    return s;
}

}  // namespace

std::size_t estimate_series_bytes(int ell, int order)
{
    double total = 0.0;
    for (int n = 0; n <= order; ++n) {
        // ζ-degree: ℓ per factor, factors k = 1..K with ℓ²K(K+1)/2 ≤ n.
        double k = std::floor((std::sqrt(1.0 + 8.0 * n / (double(ell) * ell)) - 1.0) / 2.0);
        double degree = std::min<double>(n, ell * (k + 1.0));
        double limb_bytes = 8.0 * std::ceil((std::numbers::pi * std::sqrt(2.0 * n / 3.0) / std::log(2.0) + 1.0) / 64.0);
        total += (degree + 1.0) * (sizeof(mpz_class) + limb_bytes);
    }
    return static_cast<std::size_t>(total);
}

HookSeries han_series(int ell, int order, const SeriesOptions& opts)
{
    check_order(ell, order, opts.memory_budget_bytes);
    ThreadScope scope(opts.threads > 0 ? opts.threads : default_threads());
    return build(
        ell, order,
        [](auto& c, std::size_t step, const auto& t) { kernels::omp::apply_numerator_factor(c, step, t); },
        [](auto& c, std::size_t step) { kernels::omp::apply_denominator_factor(c, step); });
}

HookSeries han_series_serial(int ell, int order)
{
    check_order(ell, order, SeriesOptions{}.memory_budget_bytes);
    return build(
        ell, order,
        [](auto& c, std::size_t step, const auto& t) { kernels::serial::apply_numerator_factor(c, step, t); },
        [](auto& c, std::size_t step) { kernels::serial::apply_denominator_factor(c, step); });
}

std::vector<mpz_class> residue_filter_exact(const HookSeries& s, int b, int a, int threads)
{
    if (b < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(b));
    }
    if (a < 0 || a >= b) {
        throw std::invalid_argument("residue must lie in [0, b)");
    }
    ThreadScope scope(threads > 0 ? threads : default_threads());
    return kernels::omp::residue_sums(s.coeffs, b, a);
}

std::vector<wide_complex> han_series_at(int ell, wide_complex xi, int order)
{
    if (ell < 1 || order < 0) {
        throw std::invalid_argument("need ell >= 1 and order >= 0");
    }
    std::vector<wide_complex> c(static_cast<std::size_t>(order) + 1, 0.0L);
    c[0] = 1.0L;
    const auto terms = kernels::numerator_binomial(ell, xi);
    for (int k = 1; static_cast<long>(ell) * k <= order; ++k) {
        kernels::serial::apply_numerator_factor(c, static_cast<std::size_t>(ell * k), terms);
    }
    for (int k = 1; k <= order; ++k) {
        kernels::serial::apply_denominator_factor(c, static_cast<std::size_t>(k));
    }
    return c;
}

std::vector<double> residue_filter_complex(int ell, int b, int a, int order)
{
    if (b < 1) {
        throw std::invalid_argument("modulus must be at least 1, got " + std::to_string(b));
    }
    if (a < 0 || a >= b) {
        throw std::invalid_argument("residue must lie in [0, b)");
    }
    const auto len = static_cast<std::size_t>(order) + 1;
    std::vector<wide_complex> acc(len, 0.0L);
    for (int k = 0; k < b; ++k) {
        const long double angle = 2.0L * std::numbers::pi_v<long double> * k / b;
        const wide_complex xi = std::polar(1.0L, angle);
        const wide_complex weight = std::polar(1.0L, -angle * a);
        const auto h = han_series_at(ell, xi, order);
        for (std::size_t n = 0; n < len; ++n) {
            acc[n] += weight * h[n];
        }
    }
    std::vector<double> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        const wide_complex v = acc[n] / static_cast<long double>(b);
        if (std::abs(v.imag()) > 1e-6L * std::max(1.0L, std::abs(v.real()))) {
            std::ostringstream msg;
            msg << "roots-of-unity filter left imaginary part " << v.imag() << " at n=" << n;
            throw std::runtime_error(msg.str());
        }
        out[n] = static_cast<double>(v.real());
    }
    return out;
}

void write_series_table(std::ostream& os, const HookSeries& s)
{
    os << "# ell=" << s.ell << " order=" << s.order << "\n";
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
        const auto& c = s.coeffs[n].coeffs();
        for (std::size_t m = 0; m < c.size(); ++m) {
            os << n << '\t' << m << '\t' << c[m].get_str() << '\n';
        }
    }
}

HookSeries read_series_table(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("series table: missing header");
    }
    HookSeries s;
    if (std::sscanf(line.c_str(), "# ell=%d order=%d", &s.ell, &s.order) != 2 || s.ell < 1 || s.order < 0) {
        throw std::runtime_error("series table: malformed header '" + line + "'");
    }
    std::vector<std::vector<mpz_class>> raw(static_cast<std::size_t>(s.order) + 1);
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        long n = -1;
        long m = -1;
        std::string value;
        if (!(row >> n >> m >> value) || n < 0 || m < 0 || n > s.order) {
            throw std::runtime_error("series table: malformed row '" + line + "'");
        }
        auto& slot = raw[static_cast<std::size_t>(n)];
        if (static_cast<std::size_t>(m) >= slot.size()) {
            slot.resize(static_cast<std::size_t>(m) + 1);
        }
        if (slot[static_cast<std::size_t>(m)].set_str(value, 10) != 0) {
            throw std::runtime_error("series table: bad integer '" + value + "'");
        }
    }
    s.coeffs.reserve(raw.size());
    for (auto& r : raw) {
        s.coeffs.emplace_back(std::move(r));
    }
    return s;
}

}  // namespace hooklens
