#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Dense univariate polynomial over Rational. coefficients()[k] is the
/// coefficient of x^k. Trailing zeros are always trimmed, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * x^k
  static Polynomial monomial(const Rational& c, std::size_t k);
  /// The polynomial x.
  static Polynomial x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k, zero past the degree.
  Rational coefficient(std::size_t k) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact value p(x) by Horner's rule.
inline Rational evaluate(const Polynomial& p, const Rational& x) { return p(x); }

/// q(x) = p(alpha * x + beta).
Polynomial compose_affine(const Polynomial& p, const Rational& alpha, const Rational& beta);

Polynomial derivative(const Polynomial& p);

/// Human-readable form, highest power first, e.g. "x^2 - x + 1/6".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace appell
