#include <doctest.h>

#include <boost/multiprecision/cpp_complex.hpp>

#include "hooklens/bernoulli.hpp"
#include "hooklens/euler_maclaurin.hpp"
#include "hooklens/hook_arcs.hpp"

using namespace hooklens;
namespace mp = boost::multiprecision;
using C50 = mp::cpp_complex_50;
using R50 = mp::cpp_bin_float_50;

namespace {

AnalyticFunction<C50> exp_minus_x(bool exact_integral)
{
    AnalyticFunction<C50> f;
    f.taylor = [](int count) {
        std::vector<C50> c;
        R50 term = 1;
        for (int n = 0; n < count; ++n) {
            c.emplace_back(term);
            term = -term / (n + 1);
        }
        return c;
    };
    f.integrand = [](const R50& x) { return C50(exp(-x)); };
    if (exact_integral) {
        f.integral = C50(1);
    }
    return f;
}

// Σ_{m≥0} e^{−(m+1)w}
C50 shifted_sum(const C50& w)
{
    return C50(1) / (exp(w) - C50(1));
}

double log_abs(const C50& z)
{
    return static_cast<double>(log(abs(z)));
}

}  // namespace

TEST_CASE("Bernoulli numbers and polynomials")
{
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == mpq_class(-1, 2));
    CHECK(bernoulli_number(2) == mpq_class(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(12) == mpq_class(-691, 2730));
    CHECK(bernoulli_polynomial(1, 1) == mpq_class(1, 2));
    CHECK(bernoulli_polynomial(2, 1) == mpq_class(1, 6));
    CHECK(bernoulli_polynomial(0, mpq_class(3, 7)) == 1);
    CHECK(bernoulli_polynomial(1, mpq_class(1, 2)) == 0);
    CHECK_THROWS_AS(bernoulli_number(65), std::out_of_range);
    CHECK_THROWS_AS(bernoulli_polynomial(65, 1), std::out_of_range);

    // B_n(x+1) − B_n(x) = n x^{n−1}
    for (int n = 1; n <= 30; ++n) {
        mpq_class x(2, 5);
        mpq_class pow = 1;
        for (int k = 0; k < n - 1; ++k) {
            pow *= x;
        }
        REQUIRE(bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x) == n * pow);
    }
}

TEST_CASE("expansion of e^{-x}")
{
    auto e = euler_maclaurin_expansion(exp_minus_x(false), mpq_class(1), 2);
    CHECK(static_cast<double>(abs(e.integral - C50(1))) < 1e-20);
    CHECK(static_cast<double>(abs(e.corrections[0] - C50(R50(-0.5)))) < 1e-40);
    CHECK(static_cast<double>(abs(e.corrections[1] - C50(R50(1) / 12))) < 1e-40);

    auto half = euler_maclaurin_expansion(exp_minus_x(true), mpq_class(1, 2), 1);
    CHECK(static_cast<double>(abs(half.corrections[0])) == 0.0);

    CHECK_THROWS_AS(euler_maclaurin_expansion(exp_minus_x(true), mpq_class(1), 0), std::invalid_argument);
}

TEST_CASE("empirical remainder order along two rays")
{
    // e_2 = e_4 = 0 for this f, so the even orders gain one extra power.
    const int expected[] = {1, 3, 3, 5};
    for (double theta : {0.0, 0.6}) {
        const C50 dir(R50(std::cos(theta)), R50(std::sin(theta)));
        for (int N = 1; N <= 4; ++N) {
            auto e = euler_maclaurin_expansion(exp_minus_x(true), mpq_class(1), N);
            const C50 w1 = dir * R50("1e-3");
            const C50 w2 = dir * R50("1e-4");
            const double r1 = log_abs(shifted_sum(w1) - e.evaluate(w1));
            const double r2 = log_abs(shifted_sum(w2) - e.evaluate(w2));
            const double slope = (r1 - r2) / std::log(10.0);
            CAPTURE(theta);
            CAPTURE(N);
            REQUIRE(slope >= N - 0.5);
            CHECK(slope == doctest::Approx(expected[N - 1]).epsilon(0.01));
        }
    }
}

TEST_CASE("quadrature detects missing decay")
{
    AnalyticFunction<C50> flat;
    flat.taylor = [](int count) { return std::vector<C50>(static_cast<std::size_t>(count), C50(1)); };
    flat.integrand = [](const R50&) { return C50(1); };
    CHECK_THROWS_AS(euler_maclaurin_expansion(flat, mpq_class(1), 1), std::runtime_error);
}

TEST_CASE("f_xi constant term")
{
    for (int ell = 1; ell <= 3; ++ell) {
        for (auto xi : {root_of_unity(1, 4), root_of_unity(1, 3), root_of_unity(2, 3)}) {
            auto e = euler_maclaurin_expansion(f_xi_function(xi, ell), mpq_class(1), 2);
            CHECK(std::abs(double(ell) * e.corrections[0] + double(ell) * std::log(xi) / 2.0) < 1e-12);
        }
    }
}
