#include "hooklens/hook_arcs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hooklens/dilogarithm.hpp"

namespace hooklens {

namespace {

// Truncated product of two series with zero-based coefficients.
std::vector<cplx> truncated_mul(const std::vector<cplx>& a, const std::vector<cplx>& b, std::size_t len)
{
    std::vector<cplx> out(len, 0.0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0.0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Coefficients of log(1 + h(z)) for a series h with h(0) = 0.
std::vector<cplx> log1p_compose(const std::vector<cplx>& h, std::size_t len)
{
    std::vector<cplx> out(len, 0.0);
    std::vector<cplx> power = h;
    // h^j starts at z^j, so j < len terms suffice.
    for (std::size_t j = 1; j < len; ++j) {
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < len; ++i) {
            out[i] += sign * power[i] / double(j);
        }
        power = truncated_mul(power, h, len);
    }
    return out;
}

// e^{−ℓz} − 1
std::vector<cplx> exp_minus_one(int ell, std::size_t len)
{
    std::vector<cplx> e(len, 0.0);
    double term = 1.0;
    for (std::size_t k = 1; k < len; ++k) {
        term *= -double(ell) / double(k);
        e[k] = term;
    }
    return e;
}

bool is_minus_one(cplx xi)
{
    return std::abs(xi + 1.0) < 1e-14;
}

bool is_one(cplx xi)
{
    return std::abs(xi - 1.0) < 1e-14;
}

}  // namespace

cplx root_of_unity(int k, int b)
{
    if (b < 1) {
        throw std::invalid_argument("root_of_unity: order must be positive");
    }
    const int r = ((k % b) + b) % b;
    if (r == 0) {
        return 1.0;
    }
    if (2 * r == b) {
        return -1.0;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * r / b);
}

std::vector<cplx> f_xi_taylor(cplx xi, int ell, int count)
{
    if (ell < 1 || count < 1) {
        throw std::invalid_argument("f_xi_taylor: need ell >= 1 and count >= 1");
    }
    const auto len = static_cast<std::size_t>(count);
    if (is_one(xi)) {
        return std::vector<cplx>(len, 0.0);
    }
    auto e = exp_minus_one(ell, len);
    if (is_minus_one(xi)) {
        // log|1 − 2e^{−ℓz}| = log(1 + 2(e^{−ℓz} − 1)) near z = 0.
        for (auto& c : e) {
            c *= 2.0;
        }
        return log1p_compose(e, len);
    }
    if (xi.imag() == 0.0 && xi.real() <= 0.0) {
        throw std::domain_error("f_xi_taylor: Log(xi) lies on the branch cut");
    }
    // 1 + (ξ−1)e^{−ℓz} = ξ·(1 + ((ξ−1)/ξ)(e^{−ℓz} − 1))
    const cplx scale = (xi - 1.0) / xi;
    for (auto& c : e) {
        c *= scale;
    }
    auto out = log1p_compose(e, len);
    out[0] = std::log(xi);
    return out;
}

AnalyticFunction<cplx> f_xi_function(cplx xi, int ell)
{
    AnalyticFunction<cplx> f;
    f.taylor = [xi, ell](int count) { return f_xi_taylor(xi, ell, count); };
    if (is_minus_one(xi)) {
        f.integrand = [ell](const double& x) { return cplx(std::log(std::abs(1.0 - 2.0 * std::exp(-ell * x))), 0.0); };
    } else {
        f.integrand = [xi, ell](const double& x) { return std::log(1.0 + (xi - 1.0) * std::exp(-ell * x)); };
    }
    // I_F on the substituted finite interval; exp_sinh on [0, ∞) trips over
    // the log singularity when ξ = −1.
    f.integral = hook_arc_integral(xi, ell).value;
    if (is_minus_one(xi)) {
        f.integral = cplx(f.integral->real(), 0.0);
    }
    return f;
}

std::string_view to_string(ArcMethod m)
{
    switch (m) {
    case ArcMethod::quadrature:
        return "quadrature";
    case ArcMethod::dilogarithm:
        return "dilogarithm";
    case ArcMethod::principal_value:
        return "principal-value";
    }
    return "unknown";
}

ArcIntegral hook_arc_integral(cplx xi, int ell)
{
    if (ell < 1) {
        throw std::invalid_argument("hook_arc_integral: ell must be positive");
    }
    ArcIntegral out;
    out.xi = xi;
    out.ell = ell;
    if (is_one(xi)) {
        out.value = 0.0;
        out.closed_form = cplx(0.0);
        return out;
    }
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double tol = 1e-14;

    if (is_minus_one(xi)) {
        auto g = [](double u) { return std::log(std::abs(1.0 - 2.0 * u)) / u; };
        double e1 = 0.0;
        double e2 = 0.0;
        const double left = integrator.integrate(g, 0.0, 0.5, tol, &e1);
        const double right = integrator.integrate(g, 0.5, 1.0, tol, &e2);
        out.value = cplx((left + right) / ell, std::numbers::pi * std::numbers::ln2 / ell);
        out.method = ArcMethod::principal_value;
        out.error_estimate = (e1 + e2) / ell;
        return out;
    }

    const cplx d = xi - 1.0;
    auto part = [&](bool imag, double* err) {
        return integrator.integrate(
            [&](double u) {
                // Log(1+du)/u → d as u → 0.
                const cplx v = (u == 0.0) ? d : std::log(1.0 + d * u) / u;
                return imag ? v.imag() : v.real();
            },
            0.0, 1.0, tol, err);
    };
    double er = 0.0;
    double ei = 0.0;
    const double re = part(false, &er);
    const double im = part(true, &ei);
    out.value = cplx(re, im) / double(ell);
    out.error_estimate = (er + ei) / ell;
    out.method = ArcMethod::quadrature;

    const cplx z = 1.0 - xi;
    if (!(std::abs(z.imag()) < 1e-15 && z.real() >= 1.0)) {
        out.closed_form = -dilogarithm(z) / double(ell);
    }
    return out;
}

DominationReport minor_arc_domination_report(int b, int ell)
{
    if (b < 2) {
        throw std::invalid_argument("minor_arc_domination_report: modulus must be at least 2");
    }
    if (ell < 1) {
        throw std::invalid_argument("minor_arc_domination_report: ell must be positive");
    }
    DominationReport rep;
    rep.b = b;
    rep.ell = ell;
    rep.entries.resize(static_cast<std::size_t>(b - 1));
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 1; k < b; ++k) {
        DominationEntry e;
        e.k = k;
        e.integral = hook_arc_integral(root_of_unity(k, b), ell);
        e.margin = -ell * e.integral.value.real();
        rep.entries[static_cast<std::size_t>(k - 1)] = e;
    }
    for (const auto& e : rep.entries) {
        rep.all_negative = rep.all_negative && e.integral.value.real() < 0.0;
        rep.max_closed_form_gap = std::max(rep.max_closed_form_gap, e.integral.closed_form_gap());
    }
    return rep;
}

}  // namespace hooklens
