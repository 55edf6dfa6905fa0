#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Jet of a formal power series: c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
///
/// Unlike Polynomial, zeros are never trimmed: a stored zero is a known
/// coefficient. Binary operations between series of different orders
/// truncate to the smaller order, so no unknown coefficient is ever
/// fabricated.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  /// Order is coeffs.size() - 1; coeffs must not be empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// The series t.
  static TruncatedSeries variable(std::size_t order);
  /// Builds from exponential coefficients a_k, i.e. c_k = a_k / k!.
  static TruncatedSeries from_exponential(std::span<const Rational> a);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// a_k = k! * c_k for every stored k.
  std::vector<Rational> exponential_coefficients() const;

  TruncatedSeries truncated(std::size_t order) const;
  /// s(-t)
  TruncatedSeries reflected() const;
  /// s(c t)
  TruncatedSeries scaled_argument(const Rational& c) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Exponential-coefficient view helpers: a_k = k! c_k and back.
std::vector<Rational> to_exponential(std::span<const Rational> ordinary);
std::vector<Rational> from_exponential(std::span<const Rational> exponential);

/// r with s * r = 1 + O(t^{N+1}). Requires s[0] != 0.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// exp(s) for s with zero constant term.
TruncatedSeries exp(const TruncatedSeries& s);

/// s^r for r >= 1 by binary powering.
TruncatedSeries pow(const TruncatedSeries& s, unsigned r);

struct ParityParts {
  TruncatedSeries even;
  TruncatedSeries odd;
};

ParityParts parity_parts(const TruncatedSeries& s);

/// Index of the first coefficient that breaks evenness (a nonzero odd
/// coefficient), or nullopt when s is even up to its order.
std::optional<std::size_t> first_even_violation(const TruncatedSeries& s);
/// Same for oddness (a nonzero even coefficient).
std::optional<std::size_t> first_odd_violation(const TruncatedSeries& s);

inline bool is_even(const TruncatedSeries& s) { return !first_even_violation(s); }
inline bool is_odd(const TruncatedSeries& s) { return !first_odd_violation(s); }

}  // namespace appell
