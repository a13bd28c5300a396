#pragma once

// Inner loops of the Han product. Each kernel has a serial reference and an
// OpenMP version; the two must produce bit-identical tables for any thread
// count, which the tests check directly.

#include <complex>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "hooklens/zeta_poly.hpp"

namespace hooklens {

// The numeric path carries 64-bit mantissas: a residue class holding a handful
// of partitions is read off a sum whose terms are of size p(n).
using wide_complex = std::complex<long double>;

}  // namespace hooklens

namespace hooklens::kernels {

/// Coefficients c_1..c_ℓ of (1+(ζ−1)x)^ℓ = 1 + Σ_j c_j(ζ) x^j; index 0 holds c_0 = 1.
std::vector<ZetaPoly> numerator_binomial(int ell);

/// (1+(ξ−1)x)^ℓ expanded with a numeric ξ.
std::vector<wide_complex> numerator_binomial(int ell, wide_complex xi);

namespace serial {

/// series ← series · (1 + Σ_j terms[j] q^{j·step}), truncated at the table length.
void apply_numerator_factor(std::vector<ZetaPoly>& series, std::size_t step,
                            std::span<const ZetaPoly> terms);
/// series ← series / (1 − q^step).
void apply_denominator_factor(std::vector<ZetaPoly>& series, std::size_t step);
/// Entry n: Σ_{m ≡ a (mod b)} [ζ^m] series[n].
std::vector<mpz_class> residue_sums(std::span<const ZetaPoly> series, int b, int a);

void apply_numerator_factor(std::vector<wide_complex>& series, std::size_t step,
                            std::span<const wide_complex> terms);
void apply_denominator_factor(std::vector<wide_complex>& series, std::size_t step);

}  // namespace serial

namespace omp {

/// Out-of-place update parallel over q-powers.
void apply_numerator_factor(std::vector<ZetaPoly>& series, std::size_t step,
                            std::span<const ZetaPoly> terms);
/// Parallel over residue chains n ≡ r (mod step); each chain is a running sum.
void apply_denominator_factor(std::vector<ZetaPoly>& series, std::size_t step);
std::vector<mpz_class> residue_sums(std::span<const ZetaPoly> series, int b, int a);

}  // namespace omp

}  // namespace hooklens::kernels
