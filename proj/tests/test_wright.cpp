#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hooklens/partition_oracle.hpp"
#include "hooklens/wright.hpp"

using namespace hooklens;
using R50 = boost::multiprecision::cpp_bin_float_50;

namespace {

// Γ(x+r)/Γ(x−r) as the finite product (x−r)(x−r+1)···(x+r−1).
double cjr_oracle(double A, double B, int j, int r)
{
    const R50 a(A);
    const R50 x = R50(j) + R50(B) + R50(3) / 2;
    R50 ratio = 1;
    for (int k = -r; k < r; ++k) {
        ratio *= x + k;
    }
    R50 fact = 1;
    for (int k = 2; k <= r; ++k) {
        fact *= k;
    }
    const R50 sa = sqrt(a);
    const R50 pref = pow(R50(-1) / (4 * sa), r) * pow(sa, R50(j) + R50(B) + R50(1) / 2) /
                     (2 * sqrt(boost::math::constants::pi<R50>()));
    return static_cast<double>(pref * ratio / fact);
}

}  // namespace

TEST_CASE("c_{j,r} against the Pochhammer product")
{
    for (double A : {std::numbers::pi * std::numbers::pi / 6, 0.7, 3.0}) {
        for (double B : {0.5, -0.25, 1.0, 0.0}) {
            for (int j = 0; j <= 4; ++j) {
                for (int r = 0; r <= 6; ++r) {
                    const double expect = cjr_oracle(A, B, j, r);
                    const double got = wright_cjr(A, B, j, r);
                    CAPTURE(A);
                    CAPTURE(B);
                    CAPTURE(j);
                    CAPTURE(r);
                    REQUIRE(std::abs(got - expect) <= 1e-12 * std::max(1e-300, std::abs(expect)) + 1e-300);
                }
            }
        }
    }
    // j + B + 3/2 − r a nonpositive integer: the ratio vanishes.
    CHECK(wright_cjr(1.0, 0.5, 0, 2) == 0.0);
    CHECK(wright_cjr(std::numbers::pi * std::numbers::pi / 6, 0.5, 0, 0) ==
          doctest::Approx(std::sqrt(std::numbers::pi) / (2 * std::sqrt(6.0))).epsilon(1e-14));
}

TEST_CASE("expansion coefficients")
{
    WrightParams w{2.0, 0.25, {{1.0, 0.0}, {0.5, -1.0}, {-2.0, 0.25}}};
    const auto ex = wright_expansion(w, 3);
    REQUIRE(ex.p.size() == 3);
    for (int r = 0; r < 3; ++r) {
        std::complex<double> expect = 0;
        for (int j = 0; j <= r; ++j) {
            expect += w.alphas[static_cast<std::size_t>(j)] * cjr_oracle(2.0, 0.25, j, r - j);
        }
        CHECK(std::abs(ex.p[static_cast<std::size_t>(r)] - expect) < 1e-13);
    }
    CHECK_THROWS_AS(wright_expansion(w, 4), std::invalid_argument);
    CHECK_THROWS_AS(wright_expansion(WrightParams{-1.0, 0.0, {{1.0, 0.0}}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(wright_expansion(WrightParams{1.0, 0.0, {}}, 1), std::invalid_argument);
}

TEST_CASE("Hardy-Ramanujan main term")
{
    const auto params = partition_wright_params();
    for (long n : {10L, 100L, 1000L}) {
        const long double closed = std::exp(std::numbers::pi_v<long double> * std::sqrt(2.0L * n / 3.0L)) /
                                   (4.0L * std::sqrt(3.0L) * n);
        CHECK(std::abs(wright_estimate(params, n, 1) / double(closed) - 1.0) < 1e-12);
    }
    const double rel100 = std::abs(wright_estimate(params, 100, 1) / 190569292.0 - 1.0);
    CHECK(rel100 == doctest::Approx(0.0457).epsilon(0.01));
    CHECK(wright_log_estimate(params, 100, 1) == doctest::Approx(std::log(wright_estimate(params, 100, 1))));
}
