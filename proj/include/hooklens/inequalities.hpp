#pragma once

// Exact checks of the "for large enough n" inequalities (Turán/Jensen,
// discrete Laguerre, multiplicative gap) and the root/unimodality reports for
// the ζ-polynomials. Every verdict is computed in integer or rational
// arithmetic.
//
// Index convention: a check "at n" is centred on s(n). Turán (d = 2) at n is
// s(n)² ≥ s(n−1)s(n+1), i.e. hyperbolicity of J^{2,n−1}; the order-d Jensen
// check at n uses J^{d,n−1}, and the order-m Laguerre check at n uses
// s(n−m..n+m).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hooklens/zeta_poly.hpp"

namespace hooklens {

struct IntegerSequenceWindow {
    std::string label;
    int offset = 0;
    std::vector<mpz_class> values;

    int first() const { return offset; }
    int last() const { return offset + static_cast<int>(values.size()) - 1; }
    bool covers(int lo, int hi) const { return lo >= first() && hi <= last(); }
    /// Throws std::out_of_range ("window too short") outside the window.
    const mpz_class& at(int n) const;
};

/// All roots of Σ_{k≤d} binom(d,k) s(n−1+k) X^k real; d ∈ {2, 3}.
bool jensen_hyperbolicity_check(const IntegerSequenceWindow& s, int d, int n);

/// L_m(s)(n) = Σ_{j=0}^{2m} (−1)^{j+m} binom(2m,j) s(n−m+j) s(n+m−j).
mpz_class laguerre_value(const IntegerSequenceWindow& s, int m, int n);
bool discrete_laguerre_check(const IntegerSequenceWindow& s, int m, int n);

/// s(n1)·s(n2) > s(n1+n2).
bool multiplicative_gap_check(const IntegerSequenceWindow& s, int n1, int n2);

struct RootVerdict {
    int degree = 0;
    int zero_multiplicity = 0;          // power of ζ factored out
    int distinct_negative_roots = 0;    // Sturm count on (−∞, 0)
    int squarefree_degree = 0;          // degree of p/ζ^k over gcd with its derivative
    bool nonpositive = false;           // every root in (−∞, 0]
    bool strictly_negative = false;     // every root in (−∞, 0)
};

/// Sturm-sequence root location. Throws std::invalid_argument for the zero polynomial.
RootVerdict root_location(const ZetaPoly& p);
/// True iff every root lies in (−∞, 0].
bool real_negative_roots_check(const ZetaPoly& p);

struct UnimodalVerdict {
    bool unimodal = false;
    std::optional<std::size_t> peak;  // smallest maximiser, when unimodal
};

/// Throws std::invalid_argument for the zero polynomial or a negative coefficient.
UnimodalVerdict unimodality_check(const ZetaPoly& p);

/// Smallest N₀ in [lo, hi] with pred(n) for all n ∈ [N₀, hi]; nullopt when
/// pred(hi) fails. The predicate is evaluated in parallel and must be pure.
std::optional<int> threshold_scan(const std::function<bool(int)>& pred, int lo, int hi, int threads = 0);

struct ScanResult {
    std::string predicate;
    int lo = 0;
    int hi = 0;
    std::optional<int> threshold;
    std::vector<int> failures;  // every n in [lo, hi] where the predicate fails, ascending
};

/// threshold_scan that also records the failing indices.
ScanResult scan_predicate(std::string name, const std::function<bool(int)>& pred, int lo, int hi,
                          int threads = 0);

struct GapScan {
    int lo = 1;
    int hi = 0;
    /// Smallest N₀ ≥ lo with s(n1)s(n2) > s(n1+n2) for all n1, n2 ∈ [N₀, hi].
    std::optional<int> threshold;
    std::vector<std::pair<int, int>> first_failures;  // up to 10 failing (n1 ≤ n2) pairs
};

/// Index 0 is excluded (s(0) = 1 makes the inequality vacuously false), so lo ≥ 1.
GapScan multiplicative_gap_scan(const IntegerSequenceWindow& s, int lo, int hi, int threads = 0);

}  // namespace hooklens
