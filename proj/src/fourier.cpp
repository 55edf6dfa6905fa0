#include "appell/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "appell/classical.hpp"
#include "appell/errors.hpp"
#include "appell/oracle.hpp"

namespace appell {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex v) {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

// Evaluates e^{2 pi i (j/2) y} for integer j with the phase reduced exactly
// modulo one period when y = p/q has a denominator that fits in 62 bits.
class HalfIntegerPhase {
 public:
  explicit HalfIntegerPhase(const Rational& y) : y_double_(y.to_double()) {
    const Integer two_q = 2 * y.denominator();
    if (mpz_sizeinbase(two_q.get_mpz_t(), 2) <= 62) {
      exact_ = true;
      period_ = two_q.get_si();
      Integer p = y.numerator() % two_q;
      if (p < 0) p += two_q;
      numerator_ = p.get_si();
    }
  }

  // e^{i pi j y}
  Complex operator()(long j) const {
    double angle;
    if (exact_) {
      __int128 r = static_cast<__int128>(j) * numerator_ % period_;
      if (r < 0) r += period_;
      angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(period_);
    } else {
      angle = std::fmod(kPi * static_cast<double>(j) * y_double_, 2.0 * kPi);
    }
    return std::polar(1.0, angle);
  }

 private:
  bool exact_ = false;
  long period_ = 1;
  long numerator_ = 0;
  double y_double_;
};

// (-i)^e
Complex neg_i_pow(std::size_t e) {
  switch (e % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

// n!/(2 pi)^n as a real number, accumulated factor by factor.
double factorial_over_two_pi_pow(std::size_t n) {
  double v = 1.0;
  for (std::size_t j = 1; j <= n; ++j) v *= static_cast<double>(j) / (2.0 * kPi);
  return v;
}

// n!/(2 pi i)^e
Complex factorial_over_two_pi_i(std::size_t n, std::size_t e) {
  double v = factorial_over_two_pi_pow(n);
  for (std::size_t j = n; j < e; ++j) v /= 2.0 * kPi;
  for (std::size_t j = e; j < n; ++j) v *= 2.0 * kPi;
  return v * neg_i_pow(e);
}

double ipow(double base, long e) {
  double r = 1.0;
  const bool neg = e < 0;
  for (long i = 0; i < (neg ? -e : e); ++i) r *= base;
  return neg ? 1.0 / r : r;
}

// Sums pair(m) for m = M down to 1, then scales.
Complex sum_pairs(std::size_t M, Complex prefactor, const std::function<Complex(long)>& pair) {
  CompensatedSum acc;
  for (long m = static_cast<long>(M); m >= 1; --m) acc.add(pair(m));
  return prefactor * acc.value();
}

FourierEvaluation finish(std::size_t n, const Rational& x, std::size_t M, Complex value,
                         const Rational& exact) {
  FourierEvaluation out;
  out.n = n;
  out.x = x;
  out.terms_M = M;
  out.partial_sum = value.real();
  out.imag_residue = value.imag();
  out.exact_value = exact;
  out.abs_error = std::abs(value.real() - exact.to_double());
  return out;
}

void require_in(const FourierDomain& dom, const Rational& y, const std::string& what) {
  if (!dom.contains(y))
    throw DomainError(what + " = " + y.str() + " outside " + (dom.lo_open ? "(" : "[") +
                      dom.lo.str() + ", " + dom.hi.str() + (dom.hi_open ? ")" : "]"));
}

FourierDomain unit_interval(bool open) { return {0, 1, open, open}; }

// Odd-parity sum over half-integer frequencies mu = m - 1/2:
//   prefactor * sum_m coeff(mu) e^{2 pi i mu y} / mu^{n+1}
// with coeff even in mu, paired as (mu, -mu).
Complex half_integer_series(std::size_t n, const Rational& y, std::size_t M, Complex prefactor,
                            const std::function<double(double)>& coeff) {
  const HalfIntegerPhase phase(y);
  const bool odd_power = (n + 1) % 2 == 1;
  return sum_pairs(M, prefactor, [&](long m) {
    const double mu = static_cast<double>(m) - 0.5;
    const Complex e = phase(2 * m - 1);
    const double inv = ipow(mu, -static_cast<long>(n + 1));
    // e/mu^{n+1} + conj(e)/(-mu)^{n+1}
    const Complex pair = odd_power ? (e - std::conj(e)) * inv : (e + std::conj(e)) * inv;
    return coeff(mu) * pair;
  });
}

// Sum over nonzero integer frequencies m, paired (m, -m):
//   prefactor * sum_{m != 0} coeff(m) e^{2 pi i m y} / m^n
Complex integer_series(std::size_t n, const Rational& y, std::size_t M, Complex prefactor,
                       const std::function<double(double)>& coeff) {
  const HalfIntegerPhase phase(y);
  const bool odd_power = n % 2 == 1;
  return sum_pairs(M, prefactor, [&](long m) {
    const double md = static_cast<double>(m);
    const Complex e = phase(2 * m);
    const double inv = ipow(md, -static_cast<long>(n));
    const Complex pair = odd_power ? (e - std::conj(e)) * inv : (e + std::conj(e)) * inv;
    return coeff(md) * pair;
  });
}

}  // namespace

bool FourierDomain::contains(const Rational& x) const {
  const bool above = lo_open ? x > lo : x >= lo;
  const bool below = hi_open ? x < hi : x <= hi;
  return above && below;
}

FourierEvaluation bernoulli_fourier(std::size_t n, const Rational& x, std::size_t M) {
  if (n == 0) throw DomainError("the Bernoulli Fourier expansion needs n >= 1");
  require_in(unit_interval(n == 1), x, "x");
  const Complex pre = -factorial_over_two_pi_i(n, n);
  const Complex value = integer_series(n, x, M, pre, [](double) { return 1.0; });
  return finish(n, x, M, value, evaluate(bernoulli_polynomial(n), x));
}

FourierEvaluation euler_fourier(std::size_t n, const Rational& x, std::size_t M) {
  require_in(unit_interval(n == 0), x, "x");
  const Complex pre = 2.0 * factorial_over_two_pi_i(n, n + 1);
  const Complex value = half_integer_series(n, x, M, pre, [](double) { return 1.0; });
  return finish(n, x, M, value, evaluate(euler_polynomial(n), x));
}

FourierEvaluation appell_fourier(const SymmetryDecomposition& d, std::size_t n, const Rational& x,
                                 std::size_t M, const AppellFourierOptions& options) {
  const bool odd = d.parity == Parity::Odd;
  const Rational& a = d.parameter_a;
  const Rational y = x / a;
  // case thresholds as published: the open interval applies at n = 0 (odd
  // remainder) or n = 1 (even remainder)
  require_in(unit_interval(odd ? n == 0 : n == 1), y, "x/a");

  const bool literal = options.variant == FourierVariant::Literal;
  std::size_t cutoff;
  if (literal) {
    if (!options.cutoff && !d.finite_support)
      throw DomainError("the printed expansion sums every a_k: supply a cutoff for a decomposition "
                        "without finite support");
    cutoff = options.cutoff.value_or(d.a_coeffs.size() - 1);
  } else {
    const std::size_t needed = odd ? n : n + 1;
    cutoff = options.cutoff ? std::min(*options.cutoff, needed) : needed;
  }
  const SymmetryDecomposition dc = with_cutoff(d, cutoff);
  const Rational exact = evaluate(odd ? reconstruct_euler_form(dc, n) : reconstruct_bernoulli_form(dc, n), x);

  // a_k / k! as doubles, with the sign of i^{k} (odd case) or i^{k-1} (even case) folded in.
  std::vector<double> weights(dc.a_coeffs.size());
  for (std::size_t k = 0; k < dc.a_coeffs.size(); ++k) {
    const bool keep = odd ? k % 2 == 0 : k % 2 == 1;
    if (!keep || dc.a_coeffs[k].is_zero()) continue;
    const std::size_t half = odd ? k / 2 : (k - 1) / 2;
    const double sign = half % 2 == 0 ? 1.0 : -1.0;
    weights[k] = sign * (dc.a_coeffs[k] / Rational(factorial(k))).to_double();
  }
  const double a_d = a.to_double();
  const double a_pow_n = ipow(a_d, static_cast<long>(n));

  Complex value;
  if (odd) {
    // c_m^-(a) = sum_{k even} a_k/k! (pi i (2m-1)/a)^k = sum a_k/k! (2 pi i mu / a)^k
    const Complex pre = 2.0 * a_pow_n * factorial_over_two_pi_i(n, n + 1);
    auto coeff = [&](double mu) {
      double c = 0.0;
      for (std::size_t k = 0; k < weights.size(); ++k)
        if (weights[k] != 0.0) c += weights[k] * ipow(2.0 * kPi * mu / a_d, static_cast<long>(k));
      return c;
    };
    value = half_integer_series(n, literal ? x : y, M, pre, coeff);
  } else if (!literal) {
    // 2 n! a^{n-1}/(2 pi i)^n sum_{m != 0} c(m) e^{2 pi i m x/a}/m^n,
    // c(m) = sum_{k odd <= n} a_k/k! (2 pi i m/a)^{k-1}, plus the constant
    // contributed by k = n + 1 (B_0 has no oscillating part).
    const Complex pre = 2.0 * ipow(a_d, static_cast<long>(n) - 1) * factorial_over_two_pi_i(n, n);
    auto coeff = [&](double m) {
      double c = 0.0;
      for (std::size_t k = 1; k < weights.size() && k <= n; ++k)
        if (weights[k] != 0.0) c += weights[k] * ipow(2.0 * kPi * m / a_d, static_cast<long>(k) - 1);
      return c;
    };
    value = integer_series(n, y, M, pre, coeff);
    if ((n + 1) % 2 == 1 && n + 1 < dc.a_coeffs.size()) {
      const Rational zero_mode = Rational(-2) * dc.a_coeffs[n + 1] /
                                 (Rational(static_cast<long>(n + 1)) * a);
      value += zero_mode.to_double();
    }
  } else {
    // -2 a^n n!/(2 pi i)^{n+1} sum_{m != 0} c_m^+(a) e^{2 pi i m x}/m^n,
    // c_m^+(a) = sum_{k odd} a_k/k! (pi i/a)^{k-1} m^{k-1}
    const Complex pre = -2.0 * a_pow_n * factorial_over_two_pi_i(n, n + 1);
    auto coeff = [&](double m) {
      double c = 0.0;
      for (std::size_t k = 1; k < weights.size(); ++k)
        if (weights[k] != 0.0) c += weights[k] * ipow(kPi * m / a_d, static_cast<long>(k) - 1);
      return c;
    };
    value = integer_series(n, x, M, pre, coeff);
  }
  return finish(n, x, M, value, exact);
}

FourierEvaluation euler_order_r_fourier(std::size_t n, unsigned r, const Rational& x, std::size_t M,
                                        EulerOrderVariant variant) {
  if (r == 0) throw DomainError("order r must be positive");
  require_in({0, Rational(static_cast<long>(r)), true, true}, x, "x");
  if (variant == EulerOrderVariant::Derived) {
    const auto d = decompose(euler_f_series(r, false, n + 1), Rational(static_cast<long>(r)), Parity::Odd);
    return appell_fourier(d, n, x, M);
  }
  const auto q = euler_fourier_coefficients(
      n, r,
      variant == EulerOrderVariant::Literal ? FourierCoefficientForm::Literal
                                            : FourierCoefficientForm::LiteralOrder2);
  std::vector<double> qd;
  for (const auto& v : q) qd.push_back(v.to_double());
  const Complex pre = factorial_over_two_pi_i(n, n + 1);
  // (pi i (2m-1))^{2k} = (-1)^k (2 pi mu)^{2k}
  auto coeff = [&](double mu) {
    double c = 0.0;
    for (std::size_t k = 0; k < qd.size(); ++k)
      c += (k % 2 == 0 ? 1.0 : -1.0) * qd[k] * ipow(2.0 * kPi * mu, 2 * static_cast<long>(k));
    return c;
  };
  const Rational y = x / Rational(static_cast<long>(r));
  const Complex value = half_integer_series(n, y, M, pre, coeff);
  const auto oracle = higher_oracle_polys(Family::Euler, r, n);
  return finish(n, x, M, value, evaluate(oracle.polynomials[n], x));
}

FourierEvaluation evaluate(const FourierTarget& target, const Rational& x, std::size_t M) {
  return std::visit(
      [&](const auto& t) -> FourierEvaluation {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, BernoulliTarget>) return bernoulli_fourier(t.n, x, M);
        else if constexpr (std::is_same_v<T, EulerTarget>) return euler_fourier(t.n, x, M);
        else if constexpr (std::is_same_v<T, AppellTarget>)
          return appell_fourier(t.decomposition, t.n, x, M, t.options);
        else return euler_order_r_fourier(t.n, t.r, x, M, t.variant);
      },
      target);
}

std::vector<FourierEvaluation> convergence_probe(const FourierTarget& target, const Rational& x,
                                                 std::span<const std::size_t> M_list) {
  for (std::size_t i = 1; i < M_list.size(); ++i)
    if (M_list[i] <= M_list[i - 1]) throw DomainError("term counts must be strictly increasing");
  std::vector<FourierEvaluation> out;
  out.reserve(M_list.size());
  for (const auto M : M_list) out.push_back(evaluate(target, x, M));
  return out;
}

bool at_rounding_floor(const FourierEvaluation& e) {
  const double scale = std::max(1.0, std::abs(e.exact_value.to_double()));
  return e.abs_error <= 16 * std::numeric_limits<double>::epsilon() * scale;
}

bool error_decays(std::span<const FourierEvaluation> probe) {
  for (std::size_t i = 1; i < probe.size(); ++i) {
    if (probe[i].abs_error < probe[i - 1].abs_error) continue;
    if (at_rounding_floor(probe[i - 1]) && at_rounding_floor(probe[i])) continue;
    return false;
  }
  return true;
}

FourierDomain fourier_domain(const FourierTarget& target) {
  return std::visit(
      [](const auto& t) -> FourierDomain {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, BernoulliTarget>) return unit_interval(t.n == 1);
        else if constexpr (std::is_same_v<T, EulerTarget>) return unit_interval(t.n == 0);
        else if constexpr (std::is_same_v<T, AppellTarget>) {
          const bool odd = t.decomposition.parity == Parity::Odd;
          const bool open = odd ? t.n == 0 : t.n == 1;
          const Rational& a = t.decomposition.parameter_a;
          if (a.sign() > 0) return {0, a, open, open};
          return {a, 0, open, open};
        } else {
          return {0, Rational(static_cast<long>(t.r)), true, true};
        }
      },
      target);
}

}  // namespace appell
