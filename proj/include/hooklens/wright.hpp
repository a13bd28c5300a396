#pragma once

// Wright's circle method, coefficient side: given the major-arc expansion
// F(e^{−z}) = z^B e^{A/z} (Σ α_j z^j + O(|z|^N)) and an exponentially smaller
// minor arc, c(n) = n^{(−2B−3)/4} e^{2√(An)} (Σ_{r<N} p_r n^{−r/2} + O(n^{−N/2})).

#include <complex>
#include <vector>

namespace hooklens {

struct WrightParams {
    double A = 0.0;
    double B = 0.0;
    std::vector<std::complex<double>> alphas;
};

struct WrightExpansion {
    WrightParams params;
    std::vector<std::complex<double>> p;  // p_r = Σ_{j≤r} α_j c_{j,r−j}
};

/// c_{j,r} = (−1/(4√A))^r √A^{j+B+1/2} / (2√π) · Γ(j+B+3/2+r) / (r! Γ(j+B+3/2−r)).
/// The Γ ratio goes through log-gamma; a pole of the denominator Γ gives 0.
double wright_cjr(double A, double B, int j, int r);

/// p_0..p_{depth−1}; depth ≤ alphas.size().
WrightExpansion wright_expansion(const WrightParams& params, int depth);

/// Real part of the truncated estimate with N terms.
double wright_estimate(const WrightParams& params, long n, int N);
/// Natural log of the estimate, for n where the value itself overflows.
double wright_log_estimate(const WrightParams& params, long n, int N);

/// (A, B, α_0) = (π²/6, 1/2, (2π)^{−1/2}): P(q) on the major arc.
WrightParams partition_wright_params();

}  // namespace hooklens
