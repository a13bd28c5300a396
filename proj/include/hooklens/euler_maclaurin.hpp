#pragma once

// Shifted Euler-Maclaurin expansion
//
//   Σ_{m≥0} f((m+a)w) = I_F/w − Σ_{n<N} B_{n+1}(a) f^{(n)}(0)/(n+1)! · w^n + O(w^N)
//
// generic over the complex scalar so the same code runs in double and in
// 50-digit arithmetic (the latter is what makes the empirical order check
// meaningful for w down to 1e-4).

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gmpxx.h>

#include "hooklens/bernoulli.hpp"

namespace hooklens {

template <typename Complex>
using real_of_t = std::decay_t<decltype(std::declval<const Complex&>().real())>;

/// Exact rational to a real scalar.
template <typename Real>
Real to_real(const mpq_class& q)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<Real>(q.get_d());
    } else {
        return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
    }
}

/// f described by its Taylor data at 0 and its values on [0, ∞).
template <typename Complex>
struct AnalyticFunction {
    using Real = real_of_t<Complex>;

    /// Returns c_0..c_{count−1} with c_n = f^{(n)}(0)/n!.
    std::function<std::vector<Complex>(int count)> taylor;
    /// f(x) for real x ≥ 0; used for I_F when no closed form is given.
    std::function<Complex(const Real&)> integrand;
    /// ∫_0^∞ f(x) dx when known exactly.
    std::optional<Complex> integral;
};

template <typename Complex>
struct EMExpansion {
    Complex integral{};               // I_F
    std::vector<Complex> corrections;  // e_n, coefficient of w^n
    int order = 0;
    mpq_class shift = 1;

    /// I_F/w + Σ_{n<order} e_n w^n.
    Complex evaluate(const Complex& w) const
    {
        Complex acc{};
        for (std::size_t n = corrections.size(); n-- > 0;) {
            acc = acc * w + corrections[n];
        }
        return integral / w + acc;
    }
};

/// I_F by double-exponential quadrature on [0, ∞), real and imaginary parts
/// separately. Throws std::runtime_error when the estimate does not settle,
/// which in practice means f lacks the required decay.
template <typename Complex>
Complex integrate_on_half_line(const AnalyticFunction<Complex>& f)
{
    using Real = real_of_t<Complex>;
    if (!f.integrand) {
        throw std::invalid_argument("no integrand supplied for I_F");
    }
    const Real tol = sqrt(std::numeric_limits<Real>::epsilon());
    boost::math::quadrature::exp_sinh<Real> integrator;
    auto part = [&](bool imag) {
        Real err = 0;
        Real l1 = 0;
        Real v = integrator.integrate(
            [&](const Real& x) {
                const Complex y = f.integrand(x);
                return imag ? Real(y.imag()) : Real(y.real());
            },
            tol, &err, &l1);
        using std::abs;
        using std::isfinite;
        if (!isfinite(v) || err > Real(1e3) * tol * (l1 > Real(1) ? l1 : Real(1))) {
            throw std::runtime_error("quadrature for I_F did not converge; integrand lacks sufficient decay");
        }
        return v;
    };
    return Complex(part(false), part(true));
}

template <typename Complex>
EMExpansion<Complex> euler_maclaurin_expansion(const AnalyticFunction<Complex>& f, const mpq_class& a,
                                               int order)
{
    using Real = real_of_t<Complex>;
    if (order < 1) {
        throw std::invalid_argument("expansion order must be positive");
    }
    if (order + 1 > kBernoulliCeiling) {
        throw std::out_of_range("expansion order exceeds the Bernoulli ceiling");
    }
    EMExpansion<Complex> out;
    out.order = order;
    out.shift = a;
    out.integral = f.integral ? *f.integral : integrate_on_half_line(f);
    const auto c = f.taylor(order);
    if (static_cast<int>(c.size()) < order) {
        throw std::invalid_argument("Taylor provider returned too few coefficients");
    }
    out.corrections.reserve(static_cast<std::size_t>(order));
    for (int n = 0; n < order; ++n) {
        // −B_{n+1}(a) f^{(n)}(0)/(n+1)! = −B_{n+1}(a) c_n/(n+1)
        const mpq_class k = -bernoulli_polynomial(n + 1, a) / (n + 1);
        out.corrections.push_back(Complex(to_real<Real>(k)) * c[static_cast<std::size_t>(n)]);
    }
    return out;
}

}  // namespace hooklens
