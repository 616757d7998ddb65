#ifndef POLYBELL_POLYNOMIAL_HPP
#define POLYBELL_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "polybell/rational.hpp"

namespace polybell
{

/// Dense univariate polynomial with Rational coefficients in ascending degree.
///
/// The coefficient vector is never empty: the zero polynomial is stored as the
/// single coefficient [0] and reports degree 0. Any other polynomial has a
/// nonzero leading coefficient.
class Polynomial
{
public:
    Polynomial() : coeffs_{Rational(0)} {}
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// x^k
    static Polynomial monomial(std::size_t k, const Rational& c = Rational(1));

    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
    /// Coefficient of x^k, zero past the degree.
    [[nodiscard]] Rational coeff(std::size_t k) const;

    [[nodiscard]] Polynomial derivative() const;
    /// Antiderivative vanishing at 0.
    [[nodiscard]] Polynomial antiderivative() const;
    /// p(x + shift)
    [[nodiscard]] Polynomial taylor_shift(const Rational& shift) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// e.g. "1 + 2/3*x + x^2"
    [[nodiscard]] std::string to_string(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// Horner evaluation.
Rational poly_eval(const Polynomial& p, const Rational& x);

} // namespace polybell

#endif
