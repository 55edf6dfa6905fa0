#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "appell/higher_order.hpp"
#include "appell/rational.hpp"
#include "appell/symmetry.hpp"

namespace appell {

/// A partial Fourier sum next to the exact polynomial value it approximates.
struct FourierEvaluation {
  std::size_t n = 0;
  Rational x;
  std::size_t terms_M = 0;  // number of conjugate pairs summed
  double partial_sum = 0.0;
  double imag_residue = 0.0;
  Rational exact_value;
  double abs_error = 0.0;

  friend bool operator==(const FourierEvaluation&, const FourierEvaluation&) = default;
};

/// -n!/(2 pi i)^n sum_{1 <= |k| <= M} e^{2 pi i k x}/k^n, against B_n(x).
/// n >= 1; 0 < x < 1 for n = 1, 0 <= x <= 1 for n >= 2.
FourierEvaluation bernoulli_fourier(std::size_t n, const Rational& x, std::size_t M);

/// 2 n!/(2 pi i)^{n+1} sum_m e^{2 pi i (m-1/2) x}/(m-1/2)^{n+1} over the M
/// pairs m, 1-m with 1 <= m <= M, against E_n(x).
/// 0 < x < 1 for n = 0, 0 <= x <= 1 for n >= 1.
FourierEvaluation euler_fourier(std::size_t n, const Rational& x, std::size_t M);

enum class FourierVariant {
  /// Substitutes the classical expansions into the reconstruction
  /// formulas: argument x/a, pairing factor 2 pi i m / a in the even case,
  /// k restricted to the terms that contribute to P_n.
  Derived,
  /// The published general expansion as printed: argument x, c_m^+ built
  /// from (pi i/a)^{k-1} m^{k-1}, all a_k up to the cutoff.
  Literal,
};

struct AppellFourierOptions {
  std::optional<std::size_t> cutoff;  // use a_k for k <= cutoff only
  FourierVariant variant = FourierVariant::Derived;
};

/// Fourier partial sum for a symmetric Appell polynomial given by its
/// decomposition; the exact reference comes from reconstruct_*_form.
FourierEvaluation appell_fourier(const SymmetryDecomposition& d, std::size_t n, const Rational& x,
                                 std::size_t M, const AppellFourierOptions& options = {});

enum class EulerOrderVariant { Literal, LiteralOrder2, Derived };

/// Order-r Euler polynomial E_n^{(r)}(x) for 0 < x < r. Literal variants
/// use the published coefficient tables; Derived goes through
/// appell_fourier with f = (2/(e^t+1))^r and a = r.
FourierEvaluation euler_order_r_fourier(std::size_t n, unsigned r, const Rational& x, std::size_t M,
                                        EulerOrderVariant variant);

struct BernoulliTarget {
  std::size_t n = 1;
};
struct EulerTarget {
  std::size_t n = 0;
};
struct AppellTarget {
  SymmetryDecomposition decomposition;
  std::size_t n = 0;
  AppellFourierOptions options;
};
struct EulerOrderTarget {
  std::size_t n = 0;
  unsigned r = 1;
  EulerOrderVariant variant = EulerOrderVariant::Derived;
};

using FourierTarget = std::variant<BernoulliTarget, EulerTarget, AppellTarget, EulerOrderTarget>;

FourierEvaluation evaluate(const FourierTarget& target, const Rational& x, std::size_t M);

/// Evaluations at each M of a strictly increasing list.
std::vector<FourierEvaluation> convergence_probe(const FourierTarget& target, const Rational& x,
                                                 std::span<const std::size_t> M_list);

/// Error at or below 16 ulps of max(1, |exact|); truncation error can no
/// longer be seen past this point.
bool at_rounding_floor(const FourierEvaluation& e);

/// True when each error is strictly smaller than the previous one, except
/// that successive errors already at the rounding floor may stall.
bool error_decays(std::span<const FourierEvaluation> probe);

/// Interval of admissible x for a target; open ends are excluded.
struct FourierDomain {
  Rational lo;
  Rational hi;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(const Rational& x) const;
};

FourierDomain fourier_domain(const FourierTarget& target);

}  // namespace appell
