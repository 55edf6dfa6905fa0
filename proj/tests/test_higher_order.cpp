#include <gtest/gtest.h>

#include "appell/classical.hpp"
#include "appell/errors.hpp"
#include "appell/higher_order.hpp"
#include "appell/oracle.hpp"
#include "test_support.hpp"

namespace appell {
namespace {

using testing::reference_poly;

TEST(HigherOrder, NumbersMatchOracle) {
  for (unsigned r = 1; r <= 5; ++r) {
    const auto b = higher_oracle_polys(Family::Bernoulli, r, 20);
    const auto e = higher_oracle_polys(Family::Euler, r, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      EXPECT_EQ(bernoulli_higher_number(n, r), b.polynomials[n](0)) << "r=" << r << " n=" << n;
      EXPECT_EQ(euler_higher_number(n, r), e.polynomials[n](0)) << "r=" << r << " n=" << n;
    }
  }
}

TEST(HigherOrder, DecompositionDisplaysMatchReference) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (std::size_t n = 0; n <= 12; ++n) {
      EXPECT_EQ(bernoulli_higher_poly_decomp(n, r), reference_poly("bernoulli_higher", r, n));
      EXPECT_EQ(euler_higher_poly_decomp(n, r), reference_poly("euler_higher", r, n));
    }
  }
}

TEST(HigherOrder, OrderOneReducesToClassical) {
  for (std::size_t n = 0; n <= 15; ++n) {
    EXPECT_EQ(bernoulli_higher_poly_decomp(n, 1), bernoulli_polynomial(n));
    EXPECT_EQ(euler_higher_poly_decomp(n, 1), euler_polynomial(n));
    EXPECT_EQ(euler_higher_poly_stirling(n, 1), euler_polynomial(n));
  }
}

TEST(HigherOrder, SpecialOrders) {
  for (std::size_t n = 0; n <= 14; ++n) {
    EXPECT_EQ(bernoulli_order2_poly(n), higher_oracle_polys(Family::Bernoulli, 2, n).polynomials[n]);
    EXPECT_EQ(bernoulli_order3_poly_general(n), higher_oracle_polys(Family::Bernoulli, 3, n).polynomials[n]);
  }
  for (std::size_t n = 2; n <= 14; ++n)
    EXPECT_EQ(euler_order2_poly(n), higher_oracle_polys(Family::Euler, 2, n).polynomials[n]);
}

TEST(HigherOrder, StirlingFormDerivedVariantMatches) {
  for (unsigned r = 1; r <= 5; ++r)
    for (std::size_t n = 0; n <= 14; ++n)
      EXPECT_EQ(bernoulli_higher_poly_stirling_derived(n, r),
                higher_oracle_polys(Family::Bernoulli, r, n).polynomials[n]);
}

TEST(HigherOrder, AppellDerivativeOnFormulaOutputs) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (std::size_t n = 1; n <= 14; ++n) {
      EXPECT_EQ(derivative(bernoulli_higher_poly_decomp(n, r)),
                Rational(static_cast<long>(n)) * bernoulli_higher_poly_decomp(n - 1, r));
      EXPECT_EQ(derivative(euler_higher_poly_stirling(n, r)),
                Rational(static_cast<long>(n)) * euler_higher_poly_stirling(n - 1, r));
    }
  }
}

TEST(HigherOrder, PrintedStirlingFormFindings) {
  // Even r agrees; odd r drops the k = (r-1)/2 term.
  EXPECT_TRUE(validate_formula(Family::Bernoulli, "stirling", 2, 12).all_match());
  EXPECT_TRUE(validate_formula(Family::Bernoulli, "stirling", 4, 12).all_match());
  const auto odd = validate_formula(Family::Bernoulli, "stirling", 3, 12);
  EXPECT_FALSE(odd.all_match());
  EXPECT_FALSE(odd.note.empty());
  EXPECT_EQ(odd.checked_n.front(), 3u);
  EXPECT_THROW(bernoulli_higher_poly_stirling(1, 2), DomainError);
  EXPECT_THROW(bernoulli_higher_poly_stirling(3, 1), DomainError);
}

TEST(HigherOrder, RefinedOrderThreeFinding) {
  const auto rep = validate_formula(Family::Bernoulli, "order3", 3, 12);
  ASSERT_FALSE(rep.all_match());
  EXPECT_EQ(rep.first_mismatch()->n, 4u);
  for (std::size_t i = 0; i < rep.checked_n.size(); ++i)
    EXPECT_EQ(rep.matches[i], rep.checked_n[i] < 4);
  EXPECT_TRUE(validate_formula(Family::Bernoulli, "order3-general", 3, 12).all_match());
}

TEST(HigherOrder, FourierCoefficientForms) {
  for (std::size_t n = 0; n <= 12; ++n) {
    const auto lit = euler_fourier_coefficients(n, 1, FourierCoefficientForm::Literal);
    const auto der = euler_fourier_coefficients(n, 1, FourierCoefficientForm::Derived);
    EXPECT_EQ(lit, der);
    EXPECT_EQ(lit.front(), Rational(2));
    for (std::size_t k = 1; k < lit.size(); ++k) EXPECT_TRUE(lit[k].is_zero());
  }
  EXPECT_FALSE(validate_formula(Family::Euler, "fourier", 2, 12).all_match());
  EXPECT_THROW(euler_fourier_coefficients(4, 3, FourierCoefficientForm::LiteralOrder2), DomainError);
}

TEST(Validation, ReportsAreStructured) {
  for (Family fam : {Family::Bernoulli, Family::Euler}) {
    for (unsigned r = 1; r <= 3; ++r) {
      const auto reports = validate_formulas(fam, r, 12);
      EXPECT_FALSE(reports.empty());
      for (const auto& rep : reports) {
        EXPECT_EQ(rep.r, r);
        EXPECT_EQ(rep.checked_n.size(), rep.matches.size());
        std::size_t bad = 0;
        for (bool m : rep.matches) bad += !m;
        EXPECT_EQ(bad, rep.mismatches.size()) << rep.formula_id;
        for (const auto& mm : rep.mismatches) EXPECT_NE(mm.formula_coeffs, mm.oracle_coeffs);
      }
    }
  }
}

TEST(Validation, UnknownOrInapplicableFormulas) {
  EXPECT_THROW(validate_formula(Family::Bernoulli, "nope", 2, 5), DomainError);
  EXPECT_THROW(validate_formula(Family::Bernoulli, "order2", 3, 5), DomainError);
  EXPECT_THROW(validate_formula(Family::Euler, "order2", 1, 5), DomainError);
  EXPECT_FALSE(formula_applies(Family::Bernoulli, "stirling", 1));
  EXPECT_TRUE(formula_applies(Family::Euler, "stirling", 1));
}

TEST(Validation, Deterministic) {
  EXPECT_EQ(validate_formulas(Family::Euler, 2, 10), validate_formulas(Family::Euler, 2, 10));
}

}  // namespace
}  // namespace appell
