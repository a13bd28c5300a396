#pragma once

// Brute-force ground truth: partitions, Ferrers-Young hook lengths and exact
// hook statistics. Everything here is independent of the q-series code so it
// can serve as the oracle for it.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hooklens/zeta_poly.hpp"

namespace hooklens {

/// A weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Column lengths λ'_j of the diagram.
    std::vector<int> conjugate_parts() const;
    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Multiplicity of each hook length in one diagram.
struct HookMultiset {
    std::map<int, std::int64_t> counts;
    std::int64_t total = 0;

    std::int64_t count(int hook) const;
    friend bool operator==(const HookMultiset&, const HookMultiset&) = default;
};

/// Single-consumer stream over the partitions of n in lexicographically
/// decreasing order: (n), (n-1,1), ..., (1,...,1).
class PartitionStream {
public:
    explicit PartitionStream(int n);

    /// Next partition, or nullopt once exhausted.
    std::optional<Partition> next();

private:
    int n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> current_;
};

std::vector<Partition> enumerate_partitions(int n);

HookMultiset hook_multiset(const Partition& lambda);

/// Number of cells of λ whose hook length is exactly ell.
int count_hooks_equal(const Partition& lambda, int ell);

/// Σ_m h_ℓ(m,n) ζ^m by enumeration.
ZetaPoly hook_count_poly_oracle(int ell, int n);

/// p(n) by the memoized pentagonal-number recurrence.
mpz_class partition_number(int n);
/// p(0..n_max) in one pass.
std::vector<mpz_class> partition_numbers(int n_max);

/// #{λ ⊢ n : (number of ℓ-hooks of λ) ≡ a (mod b)}. Requires b ≥ 2, 0 ≤ a < b.
mpz_class residue_count_oracle(int ell, int b, int a, int n);

/// Total number of cells, over all λ ⊢ n, whose hook length is ≡ a (mod b).
/// Exploratory statistic only; it does not sum to p(n) over a.
mpz_class hook_length_residue_total(int b, int a, int n);

}  // namespace hooklens
