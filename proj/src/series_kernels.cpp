#include "hooklens/series_kernels.hpp"

#include <stdexcept>

namespace hooklens::kernels {

std::vector<ZetaPoly> numerator_binomial(int ell)
{
    if (ell < 1) {
        throw std::invalid_argument("ell must be positive");
    }
    // c_j(ζ) = binom(ℓ, j) (ζ − 1)^j
    std::vector<ZetaPoly> terms;
    terms.reserve(static_cast<std::size_t>(ell) + 1);
    ZetaPoly power{1};
    const ZetaPoly zeta_minus_one{-1, 1};
    mpz_class binom = 1;
    for (int j = 0; j <= ell; ++j) {
        terms.push_back(ZetaPoly::constant(binom) * power);
        power = power * zeta_minus_one;
        binom = binom * (ell - j) / (j + 1);
    }
    return terms;
}

std::vector<wide_complex> numerator_binomial(int ell, wide_complex xi)
{
    if (ell < 1) {
        throw std::invalid_argument("ell must be positive");
    }
    std::vector<wide_complex> terms;
    wide_complex power = 1.0L;
    long double binom = 1.0L;
    for (int j = 0; j <= ell; ++j) {
        terms.push_back(binom * power);
        power *= (xi - 1.0L);
        binom = binom * (ell - j) / (j + 1);
    }
    return terms;
}

namespace serial {

void apply_numerator_factor(std::vector<ZetaPoly>& series, std::size_t step,
                            std::span<const ZetaPoly> terms)
{
    // Descending n reads only entries that have not been updated yet.
    for (std::size_t n = series.size(); n-- > step;) {
        for (std::size_t j = 1; j < terms.size() && j * step <= n; ++j) {
            series[n] += terms[j] * series[n - j * step];
        }
    }
}

void apply_denominator_factor(std::vector<ZetaPoly>& series, std::size_t step)
{
    for (std::size_t n = step; n < series.size(); ++n) {
        series[n] += series[n - step];
    }
}

std::vector<mpz_class> residue_sums(std::span<const ZetaPoly> series, int b, int a)
{
    std::vector<mpz_class> out(series.size());
    for (std::size_t n = 0; n < series.size(); ++n) {
        const auto& c = series[n].coeffs();
        for (std::size_t m = static_cast<std::size_t>(a); m < c.size(); m += static_cast<std::size_t>(b)) {
            out[n] += c[m];
        }
    }
    return out;
}

void apply_numerator_factor(std::vector<wide_complex>& series, std::size_t step,
                            std::span<const wide_complex> terms)
{
    for (std::size_t n = series.size(); n-- > step;) {
        for (std::size_t j = 1; j < terms.size() && j * step <= n; ++j) {
            series[n] += terms[j] * series[n - j * step];
        }
    }
}

void apply_denominator_factor(std::vector<wide_complex>& series, std::size_t step)
{
    for (std::size_t n = step; n < series.size(); ++n) {
        series[n] += series[n - step];
    }
}

}  // namespace serial

namespace omp {

void apply_numerator_factor(std::vector<ZetaPoly>& series, std::size_t step,
                            std::span<const ZetaPoly> terms)
{
    const std::vector<ZetaPoly> old = series;
    const auto len = static_cast<long>(series.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long ni = static_cast<long>(step); ni < len; ++ni) {
        const auto n = static_cast<std::size_t>(ni);
        for (std::size_t j = 1; j < terms.size() && j * step <= n; ++j) {
            series[n] += terms[j] * old[n - j * step];
        }
    }
}

void apply_denominator_factor(std::vector<ZetaPoly>& series, std::size_t step)
{
    const auto chains = static_cast<long>(step);
#pragma omp parallel for schedule(dynamic, 1)
    for (long r = 0; r < chains; ++r) {
        for (std::size_t n = static_cast<std::size_t>(r) + step; n < series.size(); n += step) {
            series[n] += series[n - step];
        }
    }
}

std::vector<mpz_class> residue_sums(std::span<const ZetaPoly> series, int b, int a)
{
    std::vector<mpz_class> out(series.size());
    const auto len = static_cast<long>(series.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long ni = 0; ni < len; ++ni) {
        const auto n = static_cast<std::size_t>(ni);
        const auto& c = series[n].coeffs();
        for (std::size_t m = static_cast<std::size_t>(a); m < c.size(); m += static_cast<std::size_t>(b)) {
            out[n] += c[m];
        }
    }
    return out;
}

}  // namespace omp

}  // namespace hooklens::kernels
