#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "hooklens/series_kernels.hpp"
#include "hooklens/zeta_poly.hpp"

namespace hooklens {

/// H(ζ;q) = Σ h_ℓ(m,n) ζ^m q^n truncated at q^order.
struct HookSeries {
    int ell = 1;
    int order = 0;
    std::vector<ZetaPoly> coeffs;  // indexed 0..order

    friend bool operator==(const HookSeries&, const HookSeries&) = default;
};

struct SeriesOptions {
    int threads = 0;  // 0: default_threads()
    std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

/// Rough size in bytes of the coefficient table for (ell, order).
std::size_t estimate_series_bytes(int ell, int order);

/// Exact truncation of ∏_{n≥1} (1+(ζ−1)q^{ℓn})^ℓ / (1−q^n), OpenMP kernels.
HookSeries han_series(int ell, int order, const SeriesOptions& opts = {});
/// Same product through the serial reference kernels.
HookSeries han_series_serial(int ell, int order);

/// Entry n: Σ_{m ≡ a (mod b)} [ζ^m] coeffs[n]. Requires b ≥ 2 and 0 ≤ a < b.
std::vector<mpz_class> residue_filter_exact(const HookSeries& s, int b, int a, int threads = 0);

/// (1/b) Σ_k ζ_b^{−ak} H(ζ_b^k; q) in complex floating point, real parts returned.
/// b = 1 is accepted and yields p(n). Throws std::runtime_error when an entry
/// keeps an imaginary part above 1e-6 relative.
std::vector<double> residue_filter_complex(int ell, int b, int a, int order);

/// Truncated H(ξ; q) with a numeric ξ.
std::vector<wide_complex> han_series_at(int ell, wide_complex xi, int order);

/// Line format: header "# ell=<ℓ> order=<N>", then "n\tm\th" rows for every
/// stored coefficient, ordered by n then m.
void write_series_table(std::ostream& os, const HookSeries& s);
/// Inverse of write_series_table. Throws std::runtime_error on malformed input.
HookSeries read_series_table(std::istream& is);

}  // namespace hooklens
