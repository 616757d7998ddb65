#include "polybell/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace polybell
{

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

Polynomial Polynomial::monomial(std::size_t k, const Rational& c)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        coeffs_.emplace_back(0);
    }
}

Rational Polynomial::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() == 1) {
        return Polynomial();
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * Rational(k);
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const
{
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        a[k + 1] = coeffs_[k] / Rational(k + 1);
    }
    return Polynomial(std::move(a));
}

Polynomial Polynomial::taylor_shift(const Rational& shift) const
{
    // Horner in the polynomial ring: ((c_n)(x+s) + c_{n-1})(x+s) + ...
    const Polynomial lin({shift, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin + Polynomial::constant(*it);
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(r));
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) {
            os << mag << "*";
        }
        os << var;
        if (k > 1) {
            os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.to_string();
}

Rational poly_eval(const Polynomial& p, const Rational& x)
{
    Rational acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

} // namespace polybell
