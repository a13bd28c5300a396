#include "hooklens/inequalities.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <utility>

#include "hooklens/parallel.hpp"

namespace hooklens {

namespace {

mpz_class binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Dense rational polynomial, lowest degree first, normalized.
using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

int degree(const RatPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

RatPoly derivative(const RatPoly& p)
{
    RatPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) {
        d.push_back(p[k] * static_cast<unsigned long>(k));
    }
    trim(d);
    return d;
}

RatPoly remainder(RatPoly num, const RatPoly& den)
{
    const int dd = degree(den);
    while (degree(num) >= dd && !num.empty()) {
        const int shift = degree(num) - dd;
        mpq_class factor = num.back() / den.back();
        for (int k = 0; k <= dd; ++k) {
            num[static_cast<std::size_t>(k + shift)] -= factor * den[static_cast<std::size_t>(k)];
        }
        num.back() = 0;
        trim(num);
    }
    return num;
}

int sign_at_minus_infinity(const RatPoly& p)
{
    int s = sgn(p.back());
    return (degree(p) % 2 == 0) ? s : -s;
}

int sign_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (prev != 0 && s != prev) {
            ++changes;
        }
        prev = s;
    }
    return changes;
}

bool cubic_or_lower_hyperbolic(std::vector<mpz_class> c)
{
    while (!c.empty() && sgn(c.back()) == 0) {
        c.pop_back();
    }
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 1) {
        return true;
    }
    if (deg == 2) {
        // c0 + c1 X + c2 X²
        return c[1] * c[1] - 4 * c[0] * c[2] >= 0;
    }
    // A X³ + B X² + C X + D
    const mpz_class& A = c[3];
    const mpz_class& B = c[2];
    const mpz_class& C = c[1];
    const mpz_class& D = c[0];
    mpz_class disc = 18 * A * B * C * D - 4 * B * B * B * D + B * B * C * C - 4 * A * C * C * C - 27 * A * A * D * D;
    return disc >= 0;
}

}  // namespace

const mpz_class& IntegerSequenceWindow::at(int n) const
{
    if (n < first() || n > last()) {
        throw std::out_of_range("window too short: index " + std::to_string(n) + " outside [" +
                                std::to_string(first()) + ", " + std::to_string(last()) + "] of " + label);
    }
    return values[static_cast<std::size_t>(n - offset)];
}

bool jensen_hyperbolicity_check(const IntegerSequenceWindow& s, int d, int n)
{
    if (d != 2 && d != 3) {
        throw std::invalid_argument("jensen_hyperbolicity_check: degree must be 2 or 3");
    }
    if (!s.covers(n - 1, n - 1 + d)) {
        throw std::out_of_range("window too short for Jensen degree " + std::to_string(d) + " at n=" +
                                std::to_string(n));
    }
    std::vector<mpz_class> coeffs;
    for (int k = 0; k <= d; ++k) {
        coeffs.push_back(binomial(d, k) * s.at(n - 1 + k));
    }
    return cubic_or_lower_hyperbolic(std::move(coeffs));
}

mpz_class laguerre_value(const IntegerSequenceWindow& s, int m, int n)
{
    if (m < 1) {
        throw std::invalid_argument("laguerre order must be positive");
    }
    if (!s.covers(n - m, n + m)) {
        throw std::out_of_range("window too short for Laguerre order " + std::to_string(m) + " at n=" +
                                std::to_string(n));
    }
    mpz_class total = 0;
    for (int j = 0; j <= 2 * m; ++j) {
        mpz_class term = binomial(2 * m, j) * s.at(n - m + j) * s.at(n + m - j);
        if ((j + m) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

bool discrete_laguerre_check(const IntegerSequenceWindow& s, int m, int n)
{
    return sgn(laguerre_value(s, m, n)) >= 0;
}

bool multiplicative_gap_check(const IntegerSequenceWindow& s, int n1, int n2)
{
    if (!s.covers(std::min(n1, n2), n1 + n2) || !s.covers(std::max(n1, n2), n1 + n2)) {
        throw std::out_of_range("window too short for multiplicative gap at (" + std::to_string(n1) + ", " +
                                std::to_string(n2) + ")");
    }
    return s.at(n1) * s.at(n2) > s.at(n1 + n2);
}

RootVerdict root_location(const ZetaPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("root_location: zero polynomial");
    }
    RootVerdict v;
    v.degree = static_cast<int>(p.degree());
    const auto& c = p.coeffs();
    std::size_t k = 0;
    while (sgn(c[k]) == 0) {
        ++k;
    }
    v.zero_multiplicity = static_cast<int>(k);
    RatPoly q;
    for (std::size_t i = k; i < c.size(); ++i) {
        q.emplace_back(c[i]);
    }
    const int dq = degree(q);
    if (dq == 0) {
        v.nonpositive = true;
        v.strictly_negative = (k == 0);
        return v;
    }

    // Sturm chain q, q', −rem(...), ...; its last member is gcd(q, q').
    std::vector<RatPoly> chain{q, derivative(q)};
    while (true) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) {
            break;
        }
        for (auto& x : r) {
            x = -x;
        }
        chain.push_back(std::move(r));
    }
    std::vector<int> at_neg_inf;
    std::vector<int> at_zero;
    for (const auto& f : chain) {
        at_neg_inf.push_back(sign_at_minus_infinity(f));
        at_zero.push_back(sgn(f.front()));
    }
    v.distinct_negative_roots = sign_changes(at_neg_inf) - sign_changes(at_zero);
    v.squarefree_degree = dq - degree(chain.back());
    v.nonpositive = (v.distinct_negative_roots == v.squarefree_degree);
    v.strictly_negative = v.nonpositive && k == 0;
    return v;
}

bool real_negative_roots_check(const ZetaPoly& p)
{
    return root_location(p).nonpositive;
}

UnimodalVerdict unimodality_check(const ZetaPoly& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("unimodality_check: zero polynomial");
    }
    const auto& c = p.coeffs();
    for (const auto& x : c) {
        if (sgn(x) < 0) {
            throw std::invalid_argument("unimodality_check: negative coefficient");
        }
    }
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1]) {
        ++i;
    }
    const std::size_t top = i;
    while (i + 1 < c.size() && c[i] >= c[i + 1]) {
        ++i;
    }
    UnimodalVerdict v;
    v.unimodal = (i + 1 == c.size());
    if (v.unimodal) {
        // first maximiser along the ascent
        std::size_t peak = top;
        while (peak > 0 && c[peak - 1] == c[top]) {
            --peak;
        }
        v.peak = peak;
    }
    return v;
}

std::optional<int> threshold_scan(const std::function<bool(int)>& pred, int lo, int hi, int threads)
{
    return scan_predicate("predicate", pred, lo, hi, threads).threshold;
}

ScanResult scan_predicate(std::string name, const std::function<bool(int)>& pred, int lo, int hi, int threads)
{
    if (hi < lo) {
        throw std::invalid_argument("scan range is empty");
    }
    ScanResult out{std::move(name), lo, hi, std::nullopt, {}};
    const int count = hi - lo + 1;
    std::vector<char> holds(static_cast<std::size_t>(count), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    {
        ThreadScope scope(threads > 0 ? threads : default_threads());
#pragma omp parallel for schedule(dynamic, 4)
        for (int i = 0; i < count; ++i) {
            try {
                holds[static_cast<std::size_t>(i)] = pred(lo + i) ? 1 : 0;
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (int i = 0; i < count; ++i) {
        if (!holds[static_cast<std::size_t>(i)]) {
            out.failures.push_back(lo + i);
        }
    }
    if (out.failures.empty()) {
        out.threshold = lo;
    } else if (out.failures.back() < hi) {
        out.threshold = out.failures.back() + 1;
    }
    return out;
}

GapScan multiplicative_gap_scan(const IntegerSequenceWindow& s, int lo, int hi, int threads)
{
    if (lo < 1) {
        throw std::invalid_argument("multiplicative gap scans start at index 1");
    }
    if (hi < lo) {
        throw std::invalid_argument("scan range is empty");
    }
    if (!s.covers(lo, 2 * hi)) {
        throw std::out_of_range("window too short for multiplicative gap scan up to " + std::to_string(2 * hi));
    }
    GapScan out;
    out.lo = lo;
    out.hi = hi;
    const int count = hi - lo + 1;
    // Smallest n2 ∈ [n1, hi] failing together with n1, or −1.
    std::vector<int> first_fail(static_cast<std::size_t>(count), -1);
    {
        ThreadScope scope(threads > 0 ? threads : default_threads());
#pragma omp parallel for schedule(dynamic, 4)
        for (int i = 0; i < count; ++i) {
            const int n1 = lo + i;
            for (int n2 = n1; n2 <= hi; ++n2) {
                if (!(s.at(n1) * s.at(n2) > s.at(n1 + n2))) {
                    first_fail[static_cast<std::size_t>(i)] = n2;
                    break;
                }
            }
        }
    }
    // A failing pair (n1 ≤ n2) rules out every N₀ ≤ n1.
    int worst = lo - 1;
    for (int i = 0; i < count; ++i) {
        const int n2 = first_fail[static_cast<std::size_t>(i)];
        if (n2 >= 0) {
            worst = lo + i;
            if (out.first_failures.size() < 10) {
                out.first_failures.emplace_back(lo + i, n2);
            }
        }
    }
    if (worst < hi) {
        out.threshold = worst + 1;
    }
    return out;
}

}  // namespace hooklens
