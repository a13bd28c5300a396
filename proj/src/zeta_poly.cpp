#include "hooklens/zeta_poly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace hooklens {

ZetaPoly::ZetaPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

ZetaPoly::ZetaPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

ZetaPoly ZetaPoly::constant(const mpz_class& c)
{
    return ZetaPoly(std::vector<mpz_class>{c});
}

ZetaPoly ZetaPoly::monomial(std::size_t power, const mpz_class& c)
{
    std::vector<mpz_class> v(power + 1);
    v[power] = c;
    return ZetaPoly(std::move(v));
}

mpz_class ZetaPoly::coeff(std::size_t m) const
{
    return m < coeffs_.size() ? coeffs_[m] : mpz_class(0);
}

mpz_class ZetaPoly::at_one() const
{
    mpz_class s = 0;
    for (const auto& c : coeffs_) {
        s += c;
    }
    return s;
}

mpz_class ZetaPoly::derivative_at_one() const
{
    mpz_class s = 0;
    for (std::size_t m = 1; m < coeffs_.size(); ++m) {
        s += coeffs_[m] * static_cast<unsigned long>(m);
    }
    return s;
}

void ZetaPoly::add_to(std::size_t m, const mpz_class& c)
{
    if (m >= coeffs_.size()) {
        coeffs_.resize(m + 1);
    }
    coeffs_[m] += c;
    normalize();
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) {
        coeffs_[m] += other.coeffs_[m];
    }
    normalize();
    return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return ZetaPoly(std::move(out));
}

void ZetaPoly::normalize()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

std::string ZetaPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (sgn(c) == 0) {
            continue;
        }
        mpz_class mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (k >= 1) {
            os << "z";
        }
        if (k >= 2) {
            os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ZetaPoly& p)
{
    return os << p.to_string();
}

}  // namespace hooklens
