#include "appell/series.hpp"

#include <algorithm>

#include "appell/errors.hpp"

namespace appell {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_exponential(std::span<const Rational> a) {
  return TruncatedSeries(appell::from_exponential(a));
}

std::vector<Rational> TruncatedSeries::exponential_coefficients() const {
  return to_exponential(coeffs_);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::reflected() const {
  TruncatedSeries r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

TruncatedSeries TruncatedSeries::scaled_argument(const Rational& c) const {
  TruncatedSeries r = *this;
  Rational p = 1;
  for (auto& x : r.coeffs_) {
    x *= p;
    p *= c;
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::vector<Rational> to_exponential(std::span<const Rational> ordinary) {
  std::vector<Rational> out(ordinary.size());
  Integer fact = 1;
  for (std::size_t k = 0; k < ordinary.size(); ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    out[k] = ordinary[k] * Rational(fact);
  }
  return out;
}

std::vector<Rational> from_exponential(std::span<const Rational> exponential) {
  std::vector<Rational> out(exponential.size());
  Integer fact = 1;
  for (std::size_t k = 0; k < exponential.size(); ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    out[k] = exponential[k] / Rational(fact);
  }
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  if (s[0].is_zero())
    throw DomainError("reciprocal of a series with zero constant term (order " +
                      std::to_string(s.order()) + ")");
  const std::size_t n = s.order();
  std::vector<Rational> r(n + 1);
  const Rational inv0 = Rational(1) / s[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += s[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries exp(const TruncatedSeries& s) {
  if (!s[0].is_zero())
    throw DomainError("exp of a series with nonzero constant term " + s[0].str());
  // E' = s' E  =>  k e_k = sum_{j=1}^{k} j s_j e_{k-j}
  const std::size_t n = s.order();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!s[j].is_zero()) acc += Rational(static_cast<long>(j)) * s[j] * e[k - j];
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned r) {
  if (r == 0) throw DomainError("series power requires a positive exponent");
  TruncatedSeries result = TruncatedSeries::constant(1, s.order());
  TruncatedSeries base = s;
  while (true) {
    if (r & 1U) result *= base;
    r >>= 1U;
    if (r == 0) break;
    base *= base;
  }
  return result;
}

ParityParts parity_parts(const TruncatedSeries& s) {
  std::vector<Rational> even(s.order() + 1), odd(s.order() + 1);
  for (std::size_t k = 0; k <= s.order(); ++k) (k % 2 == 0 ? even : odd)[k] = s[k];
  return {TruncatedSeries(std::move(even)), TruncatedSeries(std::move(odd))};
}

std::optional<std::size_t> first_even_violation(const TruncatedSeries& s) {
  for (std::size_t k = 1; k <= s.order(); k += 2)
    if (!s[k].is_zero()) return k;
  return std::nullopt;
}

std::optional<std::size_t> first_odd_violation(const TruncatedSeries& s) {
  for (std::size_t k = 0; k <= s.order(); k += 2)
    if (!s[k].is_zero()) return k;
  return std::nullopt;
}

}  // namespace appell
