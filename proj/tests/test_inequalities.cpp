#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "hooklens/hook_series.hpp"
#include "hooklens/inequalities.hpp"
#include "hooklens/partition_oracle.hpp"

using namespace hooklens;

namespace {

IntegerSequenceWindow partitions_window(int top)
{
    return IntegerSequenceWindow{"p(n)", 0, partition_numbers(top)};
}

ZetaPoly from_roots(const std::vector<long>& linear, const std::vector<long>& quadratic_c)
{
    ZetaPoly p{1};
    for (long r : linear) {
        p = p * ZetaPoly({r, 1});  // ζ + r, root −r
    }
    for (long c : quadratic_c) {
        p = p * ZetaPoly({c, 1, 1});  // ζ² + ζ + c, complex for c ≥ 1
    }
    return p;
}

// Distinct negative real eigenvalues of the companion matrix, for a squarefree p.
int companion_negative_roots(const ZetaPoly& p)
{
    const auto& c = p.coeffs();
    const int d = static_cast<int>(p.degree());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    const double lead = c.back().get_d();
    for (int i = 1; i < d; ++i) {
        m(i, i - 1) = 1.0;
    }
    for (int i = 0; i < d; ++i) {
        m(i, d - 1) = -c[static_cast<std::size_t>(i)].get_d() / lead;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    int count = 0;
    for (int i = 0; i < d; ++i) {
        const auto z = es.eigenvalues()[i];
        if (std::abs(z.imag()) < 1e-6 * std::max(1.0, std::abs(z.real())) && z.real() < -1e-9) {
            ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("Turán at the documented boundary")
{
    const auto s = partitions_window(30);
    CHECK(s.at(25) == 1958);
    CHECK_FALSE(jensen_hyperbolicity_check(s, 2, 25));  // 1958² < 1575·2436
    CHECK(jensen_hyperbolicity_check(s, 2, 26));
    CHECK(jensen_hyperbolicity_check(s, 2, 2));
    CHECK_FALSE(jensen_hyperbolicity_check(s, 2, 1));
}

TEST_CASE("threshold scans for p(n)")
{
    const auto s = partitions_window(502);
    auto d2 = scan_predicate("d2", [&](int n) { return jensen_hyperbolicity_check(s, 2, n); }, 2, 500, 3);
    auto d3 = scan_predicate("d3", [&](int n) { return jensen_hyperbolicity_check(s, 3, n); }, 2, 500, 2);
    auto l1 = scan_predicate("l1", [&](int n) { return discrete_laguerre_check(s, 1, n); }, 2, 500);
    auto l2 = scan_predicate("l2", [&](int n) { return discrete_laguerre_check(s, 2, n); }, 2, 500);
    CHECK(d2.threshold == 26);
    CHECK(d3.threshold == 95);
    CHECK(l1.threshold == 26);
    CHECK(l2.threshold == 186);
    CHECK(d2.failures.back() == 25);
    // d = 2 Jensen and order-1 Laguerre are the same inequality up to a factor 2.
    for (int n = 2; n <= 500; ++n) {
        REQUIRE(laguerre_value(s, 1, n) ==
                2 * (s.at(n) * s.at(n) - s.at(n - 1) * s.at(n + 1)));
    }
    auto gap = multiplicative_gap_scan(s, 1, 250, 4);
    REQUIRE(gap.threshold.has_value());
    CHECK(*gap.threshold == 4);
    for (int a = *gap.threshold; a <= 250; a += 7) {
        for (int b = a; b <= 250; b += 11) {
            REQUIRE(multiplicative_gap_check(s, a, b));
        }
    }
}

TEST_CASE("scan bookkeeping")
{
    auto r = scan_predicate("toy", [](int n) { return n % 10 != 3 || n > 40; }, 0, 60);
    CHECK(r.failures == std::vector<int>{3, 13, 23, 33});
    CHECK(r.threshold == 34);
    CHECK_FALSE(threshold_scan([](int n) { return n < 60; }, 0, 60).has_value());
    CHECK(threshold_scan([](int) { return true; }, 5, 9) == 5);
    CHECK_THROWS_AS(threshold_scan([](int) { return true; }, 9, 5), std::invalid_argument);
    // An exception in one worker reaches the caller.
    CHECK_THROWS_AS(threshold_scan(
                        [](int n) {
                            if (n == 17) {
                                throw std::out_of_range("boom");
                            }
                            return true;
                        },
                        0, 40, 4),
                    std::out_of_range);
}

TEST_CASE("window checks")
{
    const auto s = partitions_window(20);
    CHECK_THROWS_AS(jensen_hyperbolicity_check(s, 3, 19), std::out_of_range);
    CHECK_THROWS_AS(discrete_laguerre_check(s, 2, 19), std::out_of_range);
    CHECK_THROWS_AS(jensen_hyperbolicity_check(s, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(multiplicative_gap_scan(s, 1, 11), std::out_of_range);
    CHECK_THROWS_AS(multiplicative_gap_scan(s, 0, 5), std::invalid_argument);
}

TEST_CASE("cubic discriminant sign")
{
    // constant s: (1+X)³, a triple real root
    IntegerSequenceWindow w{"ones", 0, {1, 1, 1, 1, 1}};
    CHECK(jensen_hyperbolicity_check(w, 3, 2));
    // s = (1, 0, 0, 1): 1 + X³ has complex roots
    IntegerSequenceWindow v{"sparse", 0, {0, 1, 0, 0, 1}};
    CHECK_FALSE(jensen_hyperbolicity_check(v, 3, 2));
}

TEST_CASE("Sturm root location on known polynomials")
{
    CHECK(root_location(ZetaPoly({0, 4, 1})).nonpositive);          // ζ(ζ+4)
    CHECK_FALSE(root_location(ZetaPoly({0, 4, 1})).strictly_negative);
    CHECK(root_location(ZetaPoly({2, 3, 1})).strictly_negative);     // (ζ+1)(ζ+2)
    CHECK_FALSE(root_location(ZetaPoly({1, 1, 1})).nonpositive);     // complex pair
    CHECK_FALSE(root_location(ZetaPoly({-2, -1, 1})).nonpositive);   // root at 2
    CHECK(root_location(ZetaPoly({7})).strictly_negative);
    const auto rep = root_location(from_roots({3, 3, 3, 1}, {}));
    CHECK(rep.distinct_negative_roots == 2);
    CHECK(rep.squarefree_degree == 2);
    CHECK(rep.nonpositive);
    CHECK_THROWS_AS(root_location(ZetaPoly{}), std::invalid_argument);
}

TEST_CASE("Sturm against constructed roots and the companion matrix")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> pick(-12, 12);
    std::uniform_int_distribution<int> count(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long> linear;
        std::set<long> negatives;
        bool repeated = false;
        const int k = 1 + count(rng);
        for (int i = 0; i < k; ++i) {
            long r = pick(rng);
            if (r == 0) {
                r = 5;
            }
            repeated = repeated || std::find(linear.begin(), linear.end(), r) != linear.end();
            linear.push_back(r);
            if (r > 0) {
                negatives.insert(-r);
            }
        }
        std::vector<long> quads;
        if (trial % 3 == 0) {
            quads.push_back(1 + trial % 5);
        }
        const auto p = from_roots(linear, quads);
        const auto v = root_location(p);
        CAPTURE(p.to_string());
        REQUIRE(v.distinct_negative_roots == static_cast<int>(negatives.size()));
        const bool all_negative = quads.empty() && std::all_of(linear.begin(), linear.end(), [](long r) { return r > 0; });
        REQUIRE(v.nonpositive == all_negative);
        if (!repeated) {
            REQUIRE(companion_negative_roots(p) == v.distinct_negative_roots);
        }
    }
}

TEST_CASE("unimodality")
{
    auto u = unimodality_check(ZetaPoly({1, 3, 3, 1}));
    CHECK(u.unimodal);
    CHECK(u.peak == 1);
    CHECK_FALSE(unimodality_check(ZetaPoly({2, 1, 2})).unimodal);
    CHECK(unimodality_check(ZetaPoly({0, 0, 5, 2})).peak == 2);
    CHECK_THROWS_AS(unimodality_check(ZetaPoly({1, -1, 1})), std::invalid_argument);
    // The hook-count polynomials have nonnegative coefficients throughout.
    const auto s = han_series(2, 40);
    for (int n = 1; n <= 40; ++n) {
        CHECK_NOTHROW(unimodality_check(s.coeffs[static_cast<std::size_t>(n)]));
    }
}
