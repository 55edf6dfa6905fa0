#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "appell/oracle.hpp"
#include "appell/polynomial.hpp"

namespace appell {

// Closed forms for Bernoulli and Euler polynomials of order r.
//
// Several of the published forms are transcribed exactly as printed even
// where they disagree with the generating function; validate_formula()
// compares each of them against higher_oracle_polys() and reports every
// mismatch with full coefficient lists. Nothing here is "fixed up" to
// agree with the oracle.

/// B_n^{(r)} from Stirling numbers: s(r,r-n)/C(r-1,n) for n < r, else
/// n C(n-1,r-1) sum_{k=1}^{r} (-1)^{k-1} s(r,k) B_{n-r+k}/(n-r+k).
Rational bernoulli_higher_number(std::size_t n, unsigned r);

/// -2 sum_{k<=n/2} r^{n-2k-1} B_{2k+1}^{(r)}/(2k+1) C(n,2k) B_{n-2k}(x/r)
Polynomial bernoulli_higher_poly_decomp(std::size_t n, unsigned r);

/// Two-sum Stirling form as printed, valid for n >= r >= 2: the first sum
/// runs over 0 <= k <= r/2 - 1 and the second over r/2 <= k <= n/2.
Polynomial bernoulli_higher_poly_stirling(std::size_t n, unsigned r);

/// Stirling form rebuilt from the decomposition display: every
/// 0 <= k <= n/2 is covered, choosing the Stirling branch by 2k+1 < r.
Polynomial bernoulli_higher_poly_stirling_derived(std::size_t n, unsigned r);

/// sum_k 2^{n-2k} C(n,2k) B_{2k} B_{n-2k}(x/2)
Polynomial bernoulli_order2_poly(std::size_t n);

/// 3^n B_n(x/3) - 2 sum_{1<=k<=n/2} 3^{n-2k-1} B^{(3)}_{2k+1}/(2k+1) C(n,2k) B_{n-2k}(x/3)
Polynomial bernoulli_order3_poly_general(std::size_t n);

/// Refined order-3 display for n >= 4, general display below that.
Polynomial bernoulli_order3_poly(std::size_t n);

/// E_n^{(r)} = 2^{r-1}/(r-1)! sum_{j<r} (-1)^j s(r,r-j) E_{n+r-j-1}(0)
Rational euler_higher_number(std::size_t n, unsigned r);

/// sum_{k<=n/2} r^{n-2k} C(n,2k) E_{2k}^{(r)} E_{n-2k}(x/r)
Polynomial euler_higher_poly_decomp(std::size_t n, unsigned r);

/// Double sum over j < r and k <= n/2 with Stirling numbers and E_k(0).
Polynomial euler_higher_poly_stirling(std::size_t n, unsigned r);

/// Order-2 specialization: 2^n E_n(x/2) + sum_{1<=k<=n/2} C(n,2k) 2^{n+1-2k} E_{2k+1}(0) E_{n-2k}(x/2)
Polynomial euler_order2_poly(std::size_t n);

enum class FourierCoefficientForm { Literal, LiteralOrder2, Derived };

/// Coefficients q_0..q_{floor(n/2)} such that the order-r Euler Fourier
/// coefficient multiplying e^{2 pi i (m-1/2) x/r} / (m-1/2)^{n+1} equals
///   n!/(2 pi i)^{n+1} * sum_k q_k (pi i (2m-1))^{2k}.
/// Literal/LiteralOrder2 follow the published c_m(n,r) and its r = 2
/// specialization (with the 2^r/(r-1)! prefactor folded in); Derived comes
/// from the symmetric decomposition of (2/(e^t+1))^r with a = r.
std::vector<Rational> euler_fourier_coefficients(std::size_t n, unsigned r,
                                                 FourierCoefficientForm form);

struct FormulaMismatch {
  std::size_t n = 0;
  std::vector<Rational> formula_coeffs;
  std::vector<Rational> oracle_coeffs;

  friend bool operator==(const FormulaMismatch&, const FormulaMismatch&) = default;
};

struct ValidationReport {
  Family kind = Family::Bernoulli;
  unsigned r = 1;
  std::size_t max_n = 0;
  std::string formula_id;
  std::vector<std::size_t> checked_n;
  std::vector<bool> matches;  // aligned with checked_n
  std::vector<FormulaMismatch> mismatches;
  std::string note;

  bool all_match() const { return mismatches.empty(); }
  std::optional<FormulaMismatch> first_mismatch() const {
    if (mismatches.empty()) return std::nullopt;
    return mismatches.front();
  }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Formula identifiers known for a family, in a fixed order.
std::vector<std::string> formula_ids(Family kind);

/// Whether formula `id` is defined for order r.
bool formula_applies(Family kind, std::string_view id, unsigned r);

/// Compares one formula against the generating-function oracle for every
/// n in its range up to max_n. DomainError for unknown or inapplicable ids.
ValidationReport validate_formula(Family kind, std::string_view id, unsigned r, std::size_t max_n);

/// Every applicable formula for (kind, r).
std::vector<ValidationReport> validate_formulas(Family kind, unsigned r, std::size_t max_n);

}  // namespace appell
