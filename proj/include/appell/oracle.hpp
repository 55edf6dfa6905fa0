#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "appell/polynomial.hpp"
#include "appell/series.hpp"

namespace appell {

enum class Family { Bernoulli, Euler };

/// The Appell sequence generated by f(t) e^{xt}: entry n of `polynomials`
/// is P_n(x) with sum_n P_n(x) t^n / n! = f(t) e^{xt}.
struct AppellExpansion {
  TruncatedSeries f;
  std::vector<Polynomial> polynomials;
  std::size_t order = 0;

  friend bool operator==(const AppellExpansion&, const AppellExpansion&) = default;
};

/// Expands f(t) e^{xt} up to t^N. P_n(x) = sum_k C(n,k) a_k x^{n-k} with
/// a_k = k! [t^k] f. Throws DomainError when f.order() < N.
AppellExpansion appell_from_f(const TruncatedSeries& f, std::size_t order);

/// (t/(e^t - 1))^r, or ((t/r)/(e^{t/r} - 1))^r when `scaled`, to order N.
TruncatedSeries bernoulli_f_series(unsigned r, bool scaled, std::size_t order);

/// (2/(e^t + 1))^r, or (2/(e^{t/r} + 1))^r when `scaled`, to order N.
TruncatedSeries euler_f_series(unsigned r, bool scaled, std::size_t order);

/// Ground truth B_n^{(r)}(x) or E_n^{(r)}(x) for n <= N from the unscaled
/// generating function.
AppellExpansion higher_oracle_polys(Family family, unsigned r, std::size_t order);

/// Q_n = P_n * n! / (phi(0) ... phi(n)). phi must cover indices 0..polys.size()-1.
std::vector<Polynomial> phi_normalize(std::span<const Polynomial> polys,
                                      std::span<const Rational> phi);

}  // namespace appell
