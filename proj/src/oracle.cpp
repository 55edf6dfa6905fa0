#include "appell/oracle.hpp"

#include <string>

#include "appell/errors.hpp"

namespace appell {

namespace {

// sum_{k>=0} t^k / (k+1)!  ==  (e^t - 1)/t
TruncatedSeries shifted_exponential(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = Rational(1) / Rational(factorial(k + 1));
  return TruncatedSeries(std::move(c));
}

// (e^t + 1)/2
TruncatedSeries half_exp_plus_one(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) c[k] = Rational(1) / Rational(2 * factorial(k));
  return TruncatedSeries(std::move(c));
}

}  // namespace

AppellExpansion appell_from_f(const TruncatedSeries& f, std::size_t order) {
  if (f.order() < order)
    throw DomainError("appell expansion to order " + std::to_string(order) +
                      " needs f of order >= " + std::to_string(order) + ", got " +
                      std::to_string(f.order()));
  const auto a = f.truncated(order).exponential_coefficients();
  AppellExpansion out{f.truncated(order), {}, order};
  out.polynomials.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      c[n - k] = Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * a[k];
    out.polynomials.emplace_back(std::move(c));
  }
  return out;
}

TruncatedSeries bernoulli_f_series(unsigned r, bool scaled, std::size_t order) {
  if (r == 0) throw DomainError("order r must be positive");
  TruncatedSeries base = reciprocal(shifted_exponential(order));
  if (scaled) base = base.scaled_argument(Rational(1) / Rational(r));
  return pow(base, r);
}

TruncatedSeries euler_f_series(unsigned r, bool scaled, std::size_t order) {
  if (r == 0) throw DomainError("order r must be positive");
  TruncatedSeries base = reciprocal(half_exp_plus_one(order));
  if (scaled) base = base.scaled_argument(Rational(1) / Rational(r));
  return pow(base, r);
}

AppellExpansion higher_oracle_polys(Family family, unsigned r, std::size_t order) {
  const TruncatedSeries f = family == Family::Bernoulli ? bernoulli_f_series(r, false, order)
                                                        : euler_f_series(r, false, order);
  return appell_from_f(f, order);
}

std::vector<Polynomial> phi_normalize(std::span<const Polynomial> polys,
                                      std::span<const Rational> phi) {
  if (phi.size() < polys.size())
    throw DomainError("phi values cover " + std::to_string(phi.size()) + " indices, need " +
                      std::to_string(polys.size()));
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  Rational weight = 1;  // n! / (phi(0) ... phi(n))
  for (std::size_t n = 0; n < polys.size(); ++n) {
    if (phi[n].is_zero()) throw DomainError("phi(" + std::to_string(n) + ") is zero");
    if (n > 0) weight *= Rational(static_cast<long>(n));
    weight /= phi[n];
    out.push_back(polys[n] * weight);
  }
  return out;
}

}  // namespace appell
