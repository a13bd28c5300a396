#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hooklens {

/// Polynomial in ζ with arbitrary-precision integer coefficients.
///
/// Coefficients are stored densely by power of ζ and kept normalized: the
/// highest stored coefficient is nonzero, and the zero polynomial stores
/// nothing.
class ZetaPoly {
public:
    ZetaPoly() = default;
    ZetaPoly(std::initializer_list<long> coeffs);
    explicit ZetaPoly(std::vector<mpz_class> coeffs);

    static ZetaPoly constant(const mpz_class& c);
    static ZetaPoly monomial(std::size_t power, const mpz_class& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of ζ^m; zero beyond the degree.
    mpz_class coeff(std::size_t m) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Value at ζ = 1 (sum of coefficients).
    mpz_class at_one() const;
    /// Derivative at ζ = 1, i.e. Σ m·c_m.
    mpz_class derivative_at_one() const;

    void add_to(std::size_t m, const mpz_class& c);

    ZetaPoly& operator+=(const ZetaPoly& other);
    friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
    friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
    friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ZetaPoly& p);

}  // namespace hooklens
