#include "appell/higher_order.hpp"

#include <algorithm>
#include <array>

#include "appell/classical.hpp"
#include "appell/errors.hpp"

namespace appell {

namespace {

void require_order(unsigned r) {
  if (r == 0) throw DomainError("order r must be positive");
}

Rational rat(const Integer& v) { return Rational(v); }
Rational rat(std::size_t v) { return Rational(static_cast<long>(v)); }

Rational choose(std::size_t n, std::size_t k) {
  return Rational(binomial(static_cast<long>(n), static_cast<long>(k)));
}

Rational pow_r(unsigned r, long e) { return pow(Rational(static_cast<long>(r)), e); }

Polynomial bernoulli_at_x_over(std::size_t m, unsigned r) {
  return compose_affine(bernoulli_polynomial(m), Rational(1) / Rational(static_cast<long>(r)), 0);
}

Polynomial euler_at_x_over(std::size_t m, unsigned r) {
  return compose_affine(euler_polynomial(m), Rational(1) / Rational(static_cast<long>(r)), 0);
}

// C(2k, r-1) sum_{j=1}^{r} (-1)^{j-1} s(r,j) B_{2k+1-r+j}/(2k+1-r+j), i.e.
// B_{2k+1}^{(r)}/(2k+1) through the n >= r Stirling branch.
Rational odd_higher_over_index_upper(std::size_t k, unsigned r, const StirlingTable& s) {
  Rational sum;
  for (unsigned j = 1; j <= r; ++j) {
    const std::size_t idx = 2 * k + 1 + j - r;
    const Rational term = rat(s.at(r, j)) * bernoulli_number(idx) / rat(idx);
    sum += (j % 2 == 1) ? term : -term;
  }
  return choose(2 * k, r - 1) * sum;
}

// s(r, r-2k-1) / ((2k+1) C(r-1, 2k+1)): the n < r branch divided by 2k+1.
Rational odd_higher_over_index_lower(std::size_t k, unsigned r, const StirlingTable& s) {
  const long idx = static_cast<long>(2 * k + 1);
  return rat(s.at(r, static_cast<long>(r) - idx)) /
         (Rational(idx) * rat(binomial(static_cast<long>(r) - 1, idx)));
}

struct FormulaSpec {
  std::string_view id;
  std::size_t min_n;  // first n the formula is stated for (besides r constraints)
};

}  // namespace

Rational bernoulli_higher_number(std::size_t n, unsigned r) {
  require_order(r);
  const StirlingTable s(r);
  if (n < r) {
    return rat(s.at(r, static_cast<long>(r - n))) /
           rat(binomial(static_cast<long>(r) - 1, static_cast<long>(n)));
  }
  Rational sum;
  for (unsigned k = 1; k <= r; ++k) {
    const std::size_t idx = n - r + k;
    const Rational term = rat(s.at(r, k)) * bernoulli_number(idx) / rat(idx);
    sum += (k % 2 == 1) ? term : -term;
  }
  return rat(n) * choose(n - 1, r - 1) * sum;
}

Polynomial bernoulli_higher_poly_decomp(std::size_t n, unsigned r) {
  require_order(r);
  Polynomial sum;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const Rational number = bernoulli_higher_number(2 * k + 1, r);
    if (number.is_zero()) continue;
    const Rational w = pow_r(r, static_cast<long>(n) - 2 * static_cast<long>(k) - 1) * number /
                       rat(2 * k + 1) * choose(n, 2 * k);
    sum += w * bernoulli_at_x_over(n - 2 * k, r);
  }
  return sum * Rational(-2);
}

Polynomial bernoulli_higher_poly_stirling(std::size_t n, unsigned r) {
  if (r < 2 || n < r) throw DomainError("two-sum Stirling form needs n >= r >= 2");
  const StirlingTable s(r);
  const Rational lead = Rational(-2) * pow_r(r, static_cast<long>(n) - 1);
  Polynomial sum;
  // 0 <= k <= r/2 - 1
  for (std::size_t k = 0; 2 * k + 2 <= r; ++k) {
    const Rational w = pow_r(r, -2 * static_cast<long>(k)) * odd_higher_over_index_lower(k, r, s) *
                       choose(n, 2 * k);
    sum += w * bernoulli_at_x_over(n - 2 * k, r);
  }
  // r/2 <= k <= n/2
  for (std::size_t k = (r + 1) / 2; 2 * k <= n; ++k) {
    const Rational w = pow_r(r, -2 * static_cast<long>(k)) * odd_higher_over_index_upper(k, r, s) *
                       choose(n, 2 * k);
    sum += w * bernoulli_at_x_over(n - 2 * k, r);
  }
  return sum * lead;
}

Polynomial bernoulli_higher_poly_stirling_derived(std::size_t n, unsigned r) {
  require_order(r);
  const StirlingTable s(r);
  Polynomial sum;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const Rational v = 2 * k + 1 < r ? odd_higher_over_index_lower(k, r, s)
                                     : odd_higher_over_index_upper(k, r, s);
    const Rational w =
        pow_r(r, static_cast<long>(n) - 2 * static_cast<long>(k) - 1) * v * choose(n, 2 * k);
    sum += w * bernoulli_at_x_over(n - 2 * k, r);
  }
  return sum * Rational(-2);
}

Polynomial bernoulli_order2_poly(std::size_t n) {
  Polynomial sum;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const Rational w = pow_r(2, static_cast<long>(n - 2 * k)) * choose(n, 2 * k) * bernoulli_number(2 * k);
    sum += w * bernoulli_at_x_over(n - 2 * k, 2);
  }
  return sum;
}

Polynomial bernoulli_order3_poly_general(std::size_t n) {
  Polynomial sum = pow_r(3, static_cast<long>(n)) * bernoulli_at_x_over(n, 3);
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    const Rational w = Rational(-2) * pow_r(3, static_cast<long>(n) - 2 * static_cast<long>(k) - 1) *
                       bernoulli_higher_number(2 * k + 1, 3) / rat(2 * k + 1) * choose(n, 2 * k);
    sum += w * bernoulli_at_x_over(n - 2 * k, 3);
  }
  return sum;
}

Polynomial bernoulli_order3_poly(std::size_t n) {
  if (n < 4) return bernoulli_order3_poly_general(n);
  Polynomial sum = pow_r(3, static_cast<long>(n)) * bernoulli_at_x_over(n, 3);
  sum += Rational(1, 2) * pow_r(3, static_cast<long>(n) - 2) * choose(n, 2) *
         bernoulli_at_x_over(n - 2, 3);
  for (std::size_t k = 2; 2 * k <= n; ++k) {
    const Rational w = Rational(-2) * pow_r(3, static_cast<long>(n - 2 * k)) * rat(2 * k - 1) *
                       choose(n, 2 * k) * bernoulli_number(2 * k);
    sum += w * bernoulli_at_x_over(n - 2 * k, 3);
  }
  return sum;
}

Rational euler_higher_number(std::size_t n, unsigned r) {
  require_order(r);
  const StirlingTable s(r);
  Rational sum;
  for (unsigned j = 0; j < r; ++j) {
    const Rational term = rat(s.at(r, r - j)) * euler_at_zero(n + r - j - 1);
    sum += (j % 2 == 0) ? term : -term;
  }
  return pow_r(2, r - 1) / rat(factorial(r - 1)) * sum;
}

Polynomial euler_higher_poly_decomp(std::size_t n, unsigned r) {
  require_order(r);
  Polynomial sum;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const Rational number = euler_higher_number(2 * k, r);
    if (number.is_zero()) continue;
    const Rational w = pow_r(r, static_cast<long>(n - 2 * k)) * choose(n, 2 * k) * number;
    sum += w * euler_at_x_over(n - 2 * k, r);
  }
  return sum;
}

Polynomial euler_higher_poly_stirling(std::size_t n, unsigned r) {
  require_order(r);
  const StirlingTable s(r);
  Polynomial sum;
  for (unsigned j = 0; j < r; ++j) {
    const Rational sign_s = (j % 2 == 0 ? Rational(1) : Rational(-1)) * rat(s.at(r, r - j));
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      const Rational w = sign_s * choose(n, 2 * k) * pow_r(r, static_cast<long>(n - 2 * k)) *
                         euler_at_zero(2 * k + r - j - 1);
      if (w.is_zero()) continue;
      sum += w * euler_at_x_over(n - 2 * k, r);
    }
  }
  return sum * (pow_r(2, r - 1) / rat(factorial(r - 1)));
}

Polynomial euler_order2_poly(std::size_t n) {
  Polynomial sum = pow_r(2, static_cast<long>(n)) * euler_at_x_over(n, 2);
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    const Rational w = choose(n, 2 * k) * pow_r(2, static_cast<long>(n + 1 - 2 * k)) *
                       euler_at_zero(2 * k + 1);
    sum += w * euler_at_x_over(n - 2 * k, 2);
  }
  return sum;
}

std::vector<Rational> euler_fourier_coefficients(std::size_t n, unsigned r,
                                                 FourierCoefficientForm form) {
  require_order(r);
  const std::size_t kmax = n / 2;
  std::vector<Rational> q(kmax + 1);
  switch (form) {
    case FourierCoefficientForm::Literal: {
      const StirlingTable s(r);
      const Rational pre = pow_r(2, r) / rat(factorial(r - 1));
      for (std::size_t k = 0; k <= kmax; ++k) {
        Rational sum;
        for (unsigned j = 0; j < r; ++j) {
          const Rational term = rat(s.at(r, r - j)) * euler_at_zero(2 * k + r - j - 1);
          sum += (j % 2 == 0) ? term : -term;
        }
        q[k] = pre * sum;
      }
      break;
    }
    case FourierCoefficientForm::LiteralOrder2: {
      if (r != 2) throw DomainError("the order-2 Fourier coefficient form needs r = 2");
      // 2^r/(r-1)! = 4 times c_m(n,2) = 1/2 + sum_{k>=1} (pi i)^{2k}(2m-1)^{2k} E_{2k+1}
      q[0] = 2;
      for (std::size_t k = 1; k <= kmax; ++k) q[k] = Rational(4) * euler_at_zero(2 * k + 1);
      break;
    }
    case FourierCoefficientForm::Derived: {
      // 2 r^n sum_k a_k/(2k)! (pi i (2m-1)/r)^{2k}, a_k = E_{2k}^{(r)}
      const auto a = euler_f_series(r, false, n).exponential_coefficients();
      for (std::size_t k = 0; k <= kmax; ++k)
        q[k] = Rational(2) * pow_r(r, static_cast<long>(n) - 2 * static_cast<long>(k)) * a[2 * k] /
               rat(factorial(2 * k));
      break;
    }
  }
  return q;
}

namespace {

// Ordered registry; min_n is the first n each formula is stated for.
constexpr std::array<FormulaSpec, 7> kBernoulliFormulas{{{"numbers", 0},
                                                         {"decomp", 0},
                                                         {"stirling", 0},
                                                         {"stirling-derived", 0},
                                                         {"order2", 0},
                                                         {"order3", 0},
                                                         {"order3-general", 0}}};
constexpr std::array<FormulaSpec, 6> kEulerFormulas{{{"numbers", 0},
                                                     {"decomp", 0},
                                                     {"stirling", 0},
                                                     {"order2", 2},
                                                     {"fourier", 0},
                                                     {"fourier-order2", 2}}};

std::optional<FormulaSpec> find_formula(Family kind, std::string_view id) {
  auto find = [&](const auto& table) -> std::optional<FormulaSpec> {
    for (const auto& f : table)
      if (f.id == id) return f;
    return std::nullopt;
  };
  return kind == Family::Bernoulli ? find(kBernoulliFormulas) : find(kEulerFormulas);
}

std::vector<Rational> as_list(const Polynomial& p) { return p.coefficients(); }

}  // namespace

std::vector<std::string> formula_ids(Family kind) {
  std::vector<std::string> out;
  if (kind == Family::Bernoulli)
    for (const auto& f : kBernoulliFormulas) out.emplace_back(f.id);
  else
    for (const auto& f : kEulerFormulas) out.emplace_back(f.id);
  return out;
}

bool formula_applies(Family kind, std::string_view id, unsigned r) {
  if (r == 0 || !find_formula(kind, id)) return false;
  if (id == "stirling" && kind == Family::Bernoulli) return r >= 2;
  if (id == "order2" || id == "fourier-order2") return r == 2;
  if (id == "order3" || id == "order3-general") return r == 3;
  return true;
}

ValidationReport validate_formula(Family kind, std::string_view id, unsigned r, std::size_t max_n) {
  const auto spec = find_formula(kind, id);
  if (!spec) throw DomainError("unknown formula id '" + std::string(id) + "'");
  if (!formula_applies(kind, id, r))
    throw DomainError("formula '" + std::string(id) + "' is not defined for r = " + std::to_string(r));

  ValidationReport report;
  report.kind = kind;
  report.r = r;
  report.max_n = max_n;
  report.formula_id = std::string(id);

  std::size_t first_n = spec->min_n;
  if (kind == Family::Bernoulli && id == "stirling") {
    first_n = std::max<std::size_t>(first_n, r);
    report.note =
        "stated for n >= r >= 2; the bound attached to the inner display is read as k >= r/2";
  }

  const auto oracle = higher_oracle_polys(kind, r, max_n);
  const auto oracle_numbers = oracle.f.exponential_coefficients();

  for (std::size_t n = first_n; n <= max_n; ++n) {
    std::vector<Rational> formula, truth;
    if (id == "numbers") {
      formula = {kind == Family::Bernoulli ? bernoulli_higher_number(n, r) : euler_higher_number(n, r)};
      truth = {oracle_numbers[n]};
    } else if (id == "fourier" || id == "fourier-order2") {
      formula = euler_fourier_coefficients(
          n, r, id == "fourier" ? FourierCoefficientForm::Literal : FourierCoefficientForm::LiteralOrder2);
      truth = euler_fourier_coefficients(n, r, FourierCoefficientForm::Derived);
    } else {
      Polynomial p;
      if (kind == Family::Bernoulli) {
        if (id == "decomp") p = bernoulli_higher_poly_decomp(n, r);
        else if (id == "stirling") p = bernoulli_higher_poly_stirling(n, r);
        else if (id == "stirling-derived") p = bernoulli_higher_poly_stirling_derived(n, r);
        else if (id == "order2") p = bernoulli_order2_poly(n);
        else if (id == "order3") p = bernoulli_order3_poly(n);
        else p = bernoulli_order3_poly_general(n);
      } else {
        if (id == "decomp") p = euler_higher_poly_decomp(n, r);
        else if (id == "stirling") p = euler_higher_poly_stirling(n, r);
        else p = euler_order2_poly(n);
      }
      formula = as_list(p);
      truth = as_list(oracle.polynomials[n]);
    }
    const bool ok = formula == truth;
    report.checked_n.push_back(n);
    report.matches.push_back(ok);
    if (!ok) report.mismatches.push_back({n, std::move(formula), std::move(truth)});
  }
  return report;
}

std::vector<ValidationReport> validate_formulas(Family kind, unsigned r, std::size_t max_n) {
  std::vector<ValidationReport> out;
  for (const auto& id : formula_ids(kind))
    if (formula_applies(kind, id, r)) out.push_back(validate_formula(kind, id, r, max_n));
  return out;
}

}  // namespace appell
