#include "hooklens/bernoulli.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hooklens {

namespace {

mpz_class binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Σ_{k<m+1} binom(m+1,k) B_k = 0 for m ≥ 1.
const std::vector<mpq_class>& bernoulli_table()
{
    static const std::vector<mpq_class> table = [] {
        std::vector<mpq_class> b(kBernoulliCeiling + 1);
        b[0] = 1;
        for (int m = 1; m <= kBernoulliCeiling; ++m) {
            mpq_class sum = 0;
            for (int k = 0; k < m; ++k) {
                sum += mpq_class(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
            }
            b[static_cast<std::size_t>(m)] = -sum / (m + 1);
            b[static_cast<std::size_t>(m)].canonicalize();
        }
        return b;
    }();
    return table;
}

void check_index(int n)
{
    if (n < 0 || n > kBernoulliCeiling) {
        throw std::out_of_range("Bernoulli index " + std::to_string(n) + " outside [0, " +
                                std::to_string(kBernoulliCeiling) + "]");
    }
}

}  // namespace

mpq_class bernoulli_number(int n)
{
    check_index(n);
    return bernoulli_table()[static_cast<std::size_t>(n)];
}

mpq_class bernoulli_polynomial(int n, const mpq_class& a)
{
    check_index(n);
    const auto& b = bernoulli_table();
    // Horner in a over the coefficients binom(n,k) B_{n-k} of a^k.
    mpq_class acc = 0;
    for (int k = n; k >= 0; --k) {
        acc = acc * a + mpq_class(binomial(n, k)) * b[static_cast<std::size_t>(n - k)];
    }
    acc.canonicalize();
    return acc;
}

}  // namespace hooklens
