#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "appell/oracle.hpp"
#include "appell/polynomial.hpp"
#include "appell/series.hpp"

namespace appell {

/// Where P_n(a-x) and (-1)^n P_n(x) first differ: polynomial index n and
/// the coefficient of x^power on each side.
struct CoefficientMismatch {
  std::size_t n = 0;
  std::size_t power = 0;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const CoefficientMismatch&, const CoefficientMismatch&) = default;
};

struct SymmetryCheck {
  bool symmetric = true;
  std::optional<CoefficientMismatch> first_failure;
};

/// Tests P_n(a - x) == (-1)^n P_n(x) for each polys[n], exactly.
SymmetryCheck check_symmetry(std::span<const Polynomial> polys, const Rational& a);

/// Parity verdicts for a generating pair (f, g) and parameter a. Every flag
/// means "holds up to order_checked"; truncated series cannot certify more.
struct SymmetryReport {
  Rational parameter_a;
  std::size_t order_checked = 0;
  bool symmetric = false;   // P_n(a-x) = (-1)^n P_n(x) for n <= order
  bool g_odd = false;
  bool h_even = false;      // h = f exp((a/2) g)
  bool psi_odd = false;     // psi = (exp(a g) - 1) f
  bool equ1_holds = false;  // f(t) exp(a g(t)) = f(-t)
  std::optional<CoefficientMismatch> first_failure;

  friend bool operator==(const SymmetryReport&, const SymmetryReport&) = default;
};

/// Fills every verdict of SymmetryReport. g must vanish at 0.
SymmetryReport characterize(const TruncatedSeries& f, const TruncatedSeries& g, const Rational& a);

/// Polynomials P_n(x) of f(t) e^{x g(t)} = sum P_n(x) t^n/n!, n <= min order.
std::vector<Polynomial> appell_polynomials_general(const TruncatedSeries& f,
                                                   const TruncatedSeries& g);

enum class Parity { Odd, Even };

/// f = F + sum_k a_k t^k/k! with F of the declared parity.
struct SymmetryDecomposition {
  Rational parameter_a;
  Parity parity = Parity::Odd;
  std::vector<Rational> a_coeffs;  // exponential convention
  TruncatedSeries remainder_F;
  /// When true, a_k past the end of a_coeffs are exactly zero. When false
  /// (decompositions of a truncated f) they are unknown.
  bool finite_support = false;

  friend bool operator==(const SymmetryDecomposition&, const SymmetryDecomposition&) = default;
};

/// Canonical choice: a_k = k![t^k]f on the parity class that must be
/// removed, zero elsewhere. a must be nonzero.
SymmetryDecomposition decompose(const TruncatedSeries& f, const Rational& a, Parity parity);

/// Caller-supplied a_k; DomainError if f - sum a_k t^k/k! lacks the parity.
SymmetryDecomposition decompose_with(const TruncatedSeries& f, const Rational& a, Parity parity,
                                     std::span<const Rational> a_coeffs);

/// A decomposition given only by finitely many a_k (all others zero).
SymmetryDecomposition finite_decomposition(const Rational& a, Parity parity,
                                           std::vector<Rational> a_coeffs);

/// Keeps a_k for k <= cutoff and marks the support finite.
SymmetryDecomposition with_cutoff(const SymmetryDecomposition& d, std::size_t cutoff);

/// P_n(x) = sum_{k even} a_k C(n,k) a^{n-k} E_{n-k}(x/a). Needs parity Odd.
Polynomial reconstruct_euler_form(const SymmetryDecomposition& d, std::size_t n);

/// P_n(x) = -2 sum_{k odd} a_k (1/k) C(n,k-1) a^{n-k} B_{n-k+1}(x/a).
/// Needs parity Even.
Polynomial reconstruct_bernoulli_form(const SymmetryDecomposition& d, std::size_t n);

/// Same sum with the power a^{n-k+1}; kept to measure that variant. It
/// equals a * reconstruct_bernoulli_form(d, n).
Polynomial reconstruct_bernoulli_form_printed(const SymmetryDecomposition& d, std::size_t n);

/// {B_{n-2k}(x/a)} (or E) for 0 <= k <= floor(n/2). a must be nonzero.
std::vector<Polynomial> vn_basis(Family family, std::size_t n, const Rational& a);

/// Exact coordinates of p in vn_basis(family, n, a), or nullopt if p is
/// outside the span. Requires degree(p) <= n.
std::optional<std::vector<Rational>> vn_membership(const Polynomial& p, std::size_t n,
                                                   const Rational& a, Family family);

/// Solves sum_j coords[j] * columns[j] == target exactly; nullopt when
/// inconsistent. Columns must be linearly independent.
std::optional<std::vector<Rational>> solve_in_span(std::span<const Polynomial> columns,
                                                   const Polynomial& target);

}  // namespace appell
