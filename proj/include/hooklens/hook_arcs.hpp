#pragma once

// The k ≠ 0 terms of the roots-of-unity splitting. For a root of unity ξ the
// numerator ∏(1+(ξ−1)q^{ℓn})^ℓ has logarithm ℓ Σ_{n≥1} f_ξ(nw) at q = e^{−w},
// with f_ξ(z) = Log(1+(ξ−1)e^{−ℓz}). Its size is governed by
// I_{f_ξ} = ∫_0^∞ f_ξ, and the term is exponentially dominated by P(q)
// exactly when Re I_{f_ξ} < 0.

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "hooklens/euler_maclaurin.hpp"

namespace hooklens {

using cplx = std::complex<double>;

/// e^{2πik/b}
cplx root_of_unity(int k, int b);

/// Taylor coefficients c_0..c_{N−1} of f_ξ at 0 by power-series composition;
/// c_0 = Log ξ. ξ = 1 gives all zeros. ξ = −1 is routed to the absolute-value
/// variant log|1 − 2e^{−ℓz}| (c_0 = 0). Other ξ on (−∞, 0) throw std::domain_error.
std::vector<cplx> f_xi_taylor(cplx xi, int ell, int count);

/// f_ξ packaged for euler_maclaurin_expansion.
AnalyticFunction<cplx> f_xi_function(cplx xi, int ell);

enum class ArcMethod { quadrature, dilogarithm, principal_value };
std::string_view to_string(ArcMethod m);

struct ArcIntegral {
    cplx xi;
    int ell = 1;
    cplx value;
    ArcMethod method = ArcMethod::quadrature;
    /// −Li₂(1−ξ)/ℓ, present when 1−ξ is off the cut [1, ∞).
    std::optional<cplx> closed_form;
    /// Quadrature error estimate (absolute).
    double error_estimate = 0.0;

    double closed_form_gap() const { return closed_form ? std::abs(*closed_form - value) : 0.0; }
};

/// I_{f_ξ} = (1/ℓ) ∫_0^1 Log(1+(ξ−1)u) du/u after u = e^{−ℓx}.
/// For ξ = −1 the real part is (1/ℓ)∫ log|1−2u| du/u split at the log
/// singularity u = 1/2, and the imaginary part is the principal-branch value πln2/ℓ.
ArcIntegral hook_arc_integral(cplx xi, int ell);

struct DominationEntry {
    int k = 0;
    ArcIntegral integral;
    /// −ℓ·Re I_{f_ξ}; positive when the term is dominated.
    double margin = 0.0;
};

struct DominationReport {
    int b = 2;
    int ell = 1;
    std::vector<DominationEntry> entries;
    bool all_negative = true;
    double max_closed_form_gap = 0.0;
};

/// Re I_{f_ξ} for ξ = ζ_b^k, k = 1..b−1.
DominationReport minor_arc_domination_report(int b, int ell);

}  // namespace hooklens
