#include <doctest.h>

#include <set>
#include <sstream>

#include "hooklens/hook_series.hpp"
#include "hooklens/partition_oracle.hpp"
#include "hooklens/series_kernels.hpp"

using namespace hooklens;

TEST_CASE("small coefficients by hand")
{
    const auto s = han_series(2, 4);
    CHECK(s.coeffs[0] == ZetaPoly({1}));
    CHECK(s.coeffs[1] == ZetaPoly({1}));
    CHECK(s.coeffs[2] == ZetaPoly({0, 2}));
    CHECK(s.coeffs[4] == ZetaPoly({0, 4, 1}));
}

TEST_CASE("product matches enumeration")
{
    for (int ell = 1; ell <= 4; ++ell) {
        const auto s = han_series(ell, 22);
        for (int n = 0; n <= 22; ++n) {
            REQUIRE(s.coeffs[static_cast<std::size_t>(n)] == hook_count_poly_oracle(ell, n));
        }
    }
}

TEST_CASE("serial and OpenMP kernels agree exactly for every thread count")
{
    for (int ell : {1, 2, 5}) {
        const auto ref = han_series_serial(ell, 150);
        for (int t : {1, 2, 3, 8}) {
            SeriesOptions o;
            o.threads = t;
            REQUIRE(han_series(ell, 150, o) == ref);
            REQUIRE(residue_filter_exact(ref, 4, 1, t) ==
                    kernels::serial::residue_sums(ref.coeffs, 4, 1));
        }
    }
}

TEST_CASE("ℓ = 1 counts partitions by their number of corners")
{
    // A partition with k distinct part sizes has exactly k cells of hook 1.
    const auto s = han_series(1, 16);
    for (int n = 1; n <= 16; ++n) {
        ZetaPoly expect;
        for (const auto& l : enumerate_partitions(n)) {
            std::set<int> distinct(l.parts().begin(), l.parts().end());
            expect.add_to(distinct.size(), 1);
        }
        REQUIRE(s.coeffs[static_cast<std::size_t>(n)] == expect);
    }
}

TEST_CASE("exact filter against enumeration and completeness")
{
    const auto s = han_series(3, 30);
    for (int b = 2; b <= 5; ++b) {
        std::vector<mpz_class> total(31, 0);
        for (int a = 0; a < b; ++a) {
            const auto h = residue_filter_exact(s, b, a);
            for (int n = 0; n <= 30; ++n) {
                REQUIRE(h[static_cast<std::size_t>(n)] == residue_count_oracle(3, b, a, n));
                total[static_cast<std::size_t>(n)] += h[static_cast<std::size_t>(n)];
            }
        }
        CHECK(total == partition_numbers(30));
    }
    CHECK_THROWS_AS(residue_filter_exact(s, 1, 0), std::invalid_argument);
    CHECK_THROWS(residue_filter_exact(s, 3, 3));
}

TEST_CASE("complex filter tracks the exact one")
{
    for (int ell : {1, 2, 3}) {
        const auto s = han_series(ell, 200);
        for (int b = 2; b <= 12; ++b) {
            for (int a = 0; a < b; ++a) {
                const auto exact = residue_filter_exact(s, b, a);
                const auto approx = residue_filter_complex(ell, b, a, 200);
                for (int n = 0; n <= 200; ++n) {
                    const double e = exact[static_cast<std::size_t>(n)].get_d();
                    REQUIRE(std::abs(approx[static_cast<std::size_t>(n)] - e) <= 1e-9 * std::max(1.0, e));
                }
            }
        }
    }
    const auto p = residue_filter_complex(2, 1, 0, 50);
    CHECK(p[50] == doctest::Approx(204226.0));
}

TEST_CASE("series table round trip")
{
    const auto s = han_series(2, 30);
    std::stringstream ss;
    write_series_table(ss, s);
    CHECK(read_series_table(ss) == s);
    std::istringstream bad("# ell=2 order=3\n0\tx\t1\n");
    CHECK_THROWS_AS(read_series_table(bad), std::runtime_error);
}

TEST_CASE("parameter checks")
{
    CHECK_THROWS_AS(han_series(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(han_series(1, 0), std::invalid_argument);
    SeriesOptions tiny;
    tiny.memory_budget_bytes = 1024;
    CHECK_THROWS_AS(han_series(1, 400, tiny), std::length_error);
    CHECK(estimate_series_bytes(1, 400) > estimate_series_bytes(1, 200));
}
