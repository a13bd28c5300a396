#pragma once

#include <gmpxx.h>

namespace hooklens {

inline constexpr int kBernoulliCeiling = 64;

/// Bernoulli number B_n with B_1 = −1/2. Throws std::out_of_range above the ceiling.
mpq_class bernoulli_number(int n);

/// Exact B_n(a) = Σ_k binom(n,k) B_k a^{n−k}.
mpq_class bernoulli_polynomial(int n, const mpq_class& a);

}  // namespace hooklens
