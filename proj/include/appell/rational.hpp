#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace appell {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT: implicit on purpose

  Rational(const Integer& v) : value_(v) {}  // NOLINT

  /// Throws DomainError on a zero denominator.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "n". Decimal points, exponents and blanks are rejected.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Serialized form: "num/den", or "num" when the denominator is 1.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// True when the denominator is positive and gcd(|num|, den) = 1.
bool is_canonical(const Rational& r);

Rational pow(const Rational& base, long exponent);

Integer factorial(unsigned long n);

/// C(n, k); zero when k < 0 or k > n or n < 0.
Integer binomial(long n, long k);

}  // namespace appell
