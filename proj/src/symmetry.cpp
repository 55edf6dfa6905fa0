#include "appell/symmetry.hpp"

#include <algorithm>
#include <string>

#include "appell/classical.hpp"
#include "appell/errors.hpp"

namespace appell {

namespace {

void require_nonzero_a(const Rational& a) {
  if (a.is_zero()) throw DomainError("parameter a must be nonzero");
}

Rational coefficient_or_zero(const SymmetryDecomposition& d, std::size_t k) {
  if (k < d.a_coeffs.size()) return d.a_coeffs[k];
  if (!d.finite_support)
    throw DomainError("a_" + std::to_string(k) + " is not known (decomposition of order " +
                      std::to_string(d.a_coeffs.size() - 1) + ")");
  return 0;
}

Polynomial bernoulli_form(const SymmetryDecomposition& d, std::size_t n, long extra_power) {
  if (d.parity != Parity::Even)
    throw DomainError("Bernoulli-form reconstruction needs an even remainder");
  const Rational& a = d.parameter_a;
  const Rational inv_a = Rational(1) / a;
  Polynomial sum;
  for (std::size_t k = 1; k <= n + 1; k += 2) {
    const Rational ak = coefficient_or_zero(d, k);
    if (ak.is_zero()) continue;
    const long nl = static_cast<long>(n), kl = static_cast<long>(k);
    const Rational weight = ak / Rational(kl) * Rational(binomial(nl, kl - 1)) *
                            pow(a, nl - kl + extra_power);
    sum += weight * compose_affine(bernoulli_polynomial(n - k + 1), inv_a, 0);
  }
  return sum * Rational(-2);
}

}  // namespace

SymmetryCheck check_symmetry(std::span<const Polynomial> polys, const Rational& a) {
  for (std::size_t n = 0; n < polys.size(); ++n) {
    const Polynomial lhs = compose_affine(polys[n], -1, a);
    const Polynomial rhs = n % 2 == 0 ? polys[n] : -polys[n];
    if (lhs == rhs) continue;
    const auto width = static_cast<std::size_t>(std::max(lhs.degree(), rhs.degree()) + 1);
    for (std::size_t j = 0; j < width; ++j) {
      if (lhs.coefficient(j) != rhs.coefficient(j))
        return {false, CoefficientMismatch{n, j, lhs.coefficient(j), rhs.coefficient(j)}};
    }
  }
  return {true, std::nullopt};
}

std::vector<Polynomial> appell_polynomials_general(const TruncatedSeries& f,
                                                   const TruncatedSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  // P_n(x) = n! sum_j x^j / j! [t^n](f g^j); g(0) = 0 so j <= n suffices.
  std::vector<std::vector<Rational>> coeffs(order + 1);
  TruncatedSeries f_gj = f.truncated(order);
  const TruncatedSeries gt = g.truncated(order);
  Integer j_fact = 1;
  for (std::size_t j = 0; j <= order; ++j) {
    if (j > 0) {
      f_gj *= gt;
      j_fact *= static_cast<unsigned long>(j);
    }
    for (std::size_t n = j; n <= order; ++n) {
      if (coeffs[n].empty()) coeffs[n].resize(n + 1);
      coeffs[n][j] = Rational(factorial(n)) * f_gj[n] / Rational(j_fact);
    }
  }
  std::vector<Polynomial> out;
  out.reserve(order + 1);
  for (auto& c : coeffs) out.emplace_back(std::move(c));
  return out;
}

SymmetryReport characterize(const TruncatedSeries& f, const TruncatedSeries& g, const Rational& a) {
  if (!g[0].is_zero()) throw DomainError("g must vanish at 0, got g(0) = " + g[0].str());
  const std::size_t order = std::min(f.order(), g.order());
  const TruncatedSeries ft = f.truncated(order);
  const TruncatedSeries gt = g.truncated(order);

  SymmetryReport report;
  report.parameter_a = a;
  report.order_checked = order;
  report.g_odd = is_odd(gt);
  report.h_even = is_even(ft * exp(gt * (a / Rational(2))));
  const TruncatedSeries e_ag = exp(gt * a);
  report.psi_odd = is_odd((e_ag - TruncatedSeries::constant(1, order)) * ft);
  report.equ1_holds = ft * e_ag == ft.reflected();

  const auto polys = appell_polynomials_general(ft, gt);
  const auto check = check_symmetry(polys, a);
  report.symmetric = check.symmetric;
  report.first_failure = check.first_failure;
  return report;
}

SymmetryDecomposition decompose(const TruncatedSeries& f, const Rational& a, Parity parity) {
  require_nonzero_a(a);
  const auto exp_coeffs = f.exponential_coefficients();
  std::vector<Rational> ak(exp_coeffs.size());
  // An odd remainder keeps the odd part of f, so the even part goes into a_k.
  const std::size_t start = parity == Parity::Odd ? 0 : 1;
  for (std::size_t k = start; k < ak.size(); k += 2) ak[k] = exp_coeffs[k];
  const auto parts = parity_parts(f);
  return {a, parity, std::move(ak), parity == Parity::Odd ? parts.odd : parts.even, false};
}

SymmetryDecomposition decompose_with(const TruncatedSeries& f, const Rational& a, Parity parity,
                                     std::span<const Rational> a_coeffs) {
  require_nonzero_a(a);
  if (a_coeffs.size() > f.order() + 1)
    throw DomainError("more a_k supplied than the order of f");
  std::vector<Rational> ak(a_coeffs.begin(), a_coeffs.end());
  ak.resize(f.order() + 1);
  const TruncatedSeries remainder = f - TruncatedSeries::from_exponential(ak);
  const auto violation =
      parity == Parity::Odd ? first_odd_violation(remainder) : first_even_violation(remainder);
  if (violation)
    throw DomainError(std::string("remainder F is not ") +
                      (parity == Parity::Odd ? "odd" : "even") + ": coefficient of t^" +
                      std::to_string(*violation) + " is " + remainder[*violation].str());
  return {a, parity, std::move(ak), remainder, false};
}

SymmetryDecomposition finite_decomposition(const Rational& a, Parity parity,
                                           std::vector<Rational> a_coeffs) {
  require_nonzero_a(a);
  if (a_coeffs.empty()) a_coeffs.emplace_back(0);
  const std::size_t order = a_coeffs.size() - 1;
  return {a, parity, std::move(a_coeffs), TruncatedSeries(order), true};
}

SymmetryDecomposition with_cutoff(const SymmetryDecomposition& d, std::size_t cutoff) {
  if (!d.finite_support && cutoff >= d.a_coeffs.size())
    throw DomainError("cutoff " + std::to_string(cutoff) + " exceeds the known coefficients a_0..a_" +
                      std::to_string(d.a_coeffs.size() - 1));
  SymmetryDecomposition out = d;
  if (out.a_coeffs.size() > cutoff + 1) out.a_coeffs.resize(cutoff + 1);
  out.finite_support = true;
  return out;
}

Polynomial reconstruct_euler_form(const SymmetryDecomposition& d, std::size_t n) {
  if (d.parity != Parity::Odd)
    throw DomainError("Euler-form reconstruction needs an odd remainder");
  const Rational& a = d.parameter_a;
  const Rational inv_a = Rational(1) / a;
  Polynomial sum;
  for (std::size_t k = 0; k <= n; k += 2) {
    const Rational ak = coefficient_or_zero(d, k);
    if (ak.is_zero()) continue;
    const long nl = static_cast<long>(n), kl = static_cast<long>(k);
    const Rational weight = ak * Rational(binomial(nl, kl)) * pow(a, nl - kl);
    sum += weight * compose_affine(euler_polynomial(n - k), inv_a, 0);
  }
  return sum;
}

Polynomial reconstruct_bernoulli_form(const SymmetryDecomposition& d, std::size_t n) {
  return bernoulli_form(d, n, 0);
}

Polynomial reconstruct_bernoulli_form_printed(const SymmetryDecomposition& d, std::size_t n) {
  return bernoulli_form(d, n, 1);
}

std::vector<Polynomial> vn_basis(Family family, std::size_t n, const Rational& a) {
  require_nonzero_a(a);
  const Rational inv_a = Rational(1) / a;
  std::vector<Polynomial> basis;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const std::size_t m = n - 2 * k;
    const Polynomial base = family == Family::Bernoulli ? bernoulli_polynomial(m) : euler_polynomial(m);
    basis.push_back(compose_affine(base, inv_a, 0));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_in_span(std::span<const Polynomial> columns,
                                                   const Polynomial& target) {
  std::size_t rows = static_cast<std::size_t>(std::max(target.degree() + 1, 0));
  for (const auto& c : columns) rows = std::max(rows, static_cast<std::size_t>(std::max(c.degree() + 1, 0)));
  const std::size_t cols = columns.size();

  // Augmented matrix [A | b], row i = coefficient of x^i.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = columns[j].coefficient(i);
    m[i][cols] = target.coefficient(i);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;
  if (pivot_col.size() != cols) throw DomainError("span columns are linearly dependent");

  std::vector<Rational> coords(cols);
  for (std::size_t i = 0; i < r; ++i) coords[pivot_col[i]] = m[i][cols];
  return coords;
}

std::optional<std::vector<Rational>> vn_membership(const Polynomial& p, std::size_t n,
                                                   const Rational& a, Family family) {
  require_nonzero_a(a);
  if (p.degree() > static_cast<int>(n))
    throw DomainError("polynomial of degree " + std::to_string(p.degree()) +
                      " cannot lie in V_" + std::to_string(n));
  const auto basis = vn_basis(family, n, a);
  return solve_in_span(basis, p);
}

}  // namespace appell
