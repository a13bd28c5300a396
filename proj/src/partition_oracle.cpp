#include "hooklens/partition_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace hooklens {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::conjugate_parts() const
{
    if (parts_.empty()) {
        return {};
    }
    // λ'_j = #{k : λ_k ≥ j}, read off by walking the rows once.
    std::vector<int> cols(static_cast<std::size_t>(parts_.front()), 0);
    for (int row : parts_) {
        for (int j = 0; j < row; ++j) {
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    return cols;
}

Partition Partition::conjugate() const
{
    return Partition(conjugate_parts());
}

std::int64_t HookMultiset::count(int hook) const
{
    auto it = counts.find(hook);
    return it == counts.end() ? 0 : it->second;
}

PartitionStream::PartitionStream(int n) : n_(n)
{
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
}

std::optional<Partition> PartitionStream::next()
{
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        if (n_ > 0) {
            current_.push_back(n_);
        }
        if (n_ <= 1) {
            done_ = true;
        }
        return Partition(current_);
    }

    // Strip trailing ones, lower the last part > 1 and refill greedily with
    // parts no larger than the lowered value.
    int freed = 0;
    while (!current_.empty() && current_.back() == 1) {
        current_.pop_back();
        ++freed;
    }
    if (current_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    int cap = --current_.back();
    ++freed;
    while (freed > 0) {
        int part = std::min(cap, freed);
        current_.push_back(part);
        freed -= part;
    }
    if (current_.front() == 1) {
        done_ = true;
    }
    return Partition(current_);
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    PartitionStream stream(n);
    while (auto p = stream.next()) {
        out.push_back(std::move(*p));
    }
    return out;
}

HookMultiset hook_multiset(const Partition& lambda)
{
    HookMultiset hm;
    const auto& rows = lambda.parts();
    const auto cols = lambda.conjugate_parts();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (int j = 0; j < rows[k]; ++j) {
            // 0-based form of (λ_k − k) + (λ'_j − j) + 1.
            int h = (rows[k] - static_cast<int>(k) - 1) + (cols[static_cast<std::size_t>(j)] - j - 1) + 1;
            ++hm.counts[h];
            ++hm.total;
        }
    }
    return hm;
}

int count_hooks_equal(const Partition& lambda, int ell)
{
    const auto& rows = lambda.parts();
    const auto cols = lambda.conjugate_parts();
    int count = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (int j = 0; j < rows[k]; ++j) {
            int h = (rows[k] - static_cast<int>(k) - 1) + (cols[static_cast<std::size_t>(j)] - j - 1) + 1;
            count += (h == ell);
        }
    }
    return count;
}

ZetaPoly hook_count_poly_oracle(int ell, int n)
{
    if (ell < 1) {
        throw std::invalid_argument("ell must be positive");
    }
    std::vector<mpz_class> coeffs;
    PartitionStream stream(n);
    while (auto p = stream.next()) {
        auto m = static_cast<std::size_t>(count_hooks_equal(*p, ell));
        if (m >= coeffs.size()) {
            coeffs.resize(m + 1);
        }
        ++coeffs[m];
    }
    return ZetaPoly(std::move(coeffs));
}

namespace {

// Shared memo for the pentagonal recurrence; grows monotonically.
std::mutex g_memo_mutex;
std::vector<mpz_class> g_memo{mpz_class(1)};

void extend_memo(int n)
{
    for (int m = static_cast<int>(g_memo.size()); m <= n; ++m) {
        mpz_class sum = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            int g2 = k * (3 * k + 1) / 2;
            const bool plus = (k % 2) == 1;
            if (plus) {
                sum += g_memo[static_cast<std::size_t>(m - g1)];
            } else {
                sum -= g_memo[static_cast<std::size_t>(m - g1)];
            }
            if (g2 <= m) {
                if (plus) {
                    sum += g_memo[static_cast<std::size_t>(m - g2)];
                } else {
                    sum -= g_memo[static_cast<std::size_t>(m - g2)];
                }
            }
        }
        g_memo.push_back(sum);
    }
}

}  // namespace

mpz_class partition_number(int n)
{
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    std::lock_guard lock(g_memo_mutex);
    extend_memo(n);
    return g_memo[static_cast<std::size_t>(n)];
}

std::vector<mpz_class> partition_numbers(int n_max)
{
    if (n_max < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    std::lock_guard lock(g_memo_mutex);
    extend_memo(n_max);
    return {g_memo.begin(), g_memo.begin() + n_max + 1};
}

mpz_class residue_count_oracle(int ell, int b, int a, int n)
{
    if (b < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(b));
    }
    if (a < 0 || a >= b) {
        throw std::invalid_argument("residue must lie in [0, b)");
    }
    mpz_class count = 0;
    PartitionStream stream(n);
    while (auto p = stream.next()) {
        if (count_hooks_equal(*p, ell) % b == a) {
            ++count;
        }
    }
    return count;
}

mpz_class hook_length_residue_total(int b, int a, int n)
{
    if (b < 1 || a < 0 || a >= b) {
        throw std::invalid_argument("need b >= 1 and 0 <= a < b");
    }
    mpz_class total = 0;
    PartitionStream stream(n);
    while (auto p = stream.next()) {
        for (const auto& [h, mult] : hook_multiset(*p).counts) {
            if (h % b == a) {
                total += static_cast<long>(mult);
            }
        }
    }
    return total;
}

}  // namespace hooklens
