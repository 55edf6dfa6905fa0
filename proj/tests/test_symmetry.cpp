#include <gtest/gtest.h>

#include "appell/classical.hpp"
#include "appell/errors.hpp"
#include "appell/oracle.hpp"
#include "appell/symmetry.hpp"
#include "test_support.hpp"

namespace appell {
namespace {

TruncatedSeries family_f(Family fam, unsigned r, bool scaled, std::size_t order) {
  return fam == Family::Bernoulli ? bernoulli_f_series(r, scaled, order) : euler_f_series(r, scaled, order);
}

TEST(Symmetry, HigherOrderFamiliesAreSymmetric) {
  for (unsigned r = 1; r <= 5; ++r) {
    for (Family fam : {Family::Bernoulli, Family::Euler}) {
      const auto polys = higher_oracle_polys(fam, r, 30).polynomials;
      const auto check = check_symmetry(polys, static_cast<long>(r));
      EXPECT_TRUE(check.symmetric) << family_name(fam) << " r=" << r;
      EXPECT_FALSE(check_symmetry(polys, static_cast<long>(r) + 1).symmetric);
    }
  }
}

TEST(Symmetry, CharacterizeFamilies) {
  for (unsigned r = 1; r <= 5; ++r) {
    for (Family fam : {Family::Bernoulli, Family::Euler}) {
      const auto rep = characterize(family_f(fam, r, false, 30), TruncatedSeries::variable(30), static_cast<long>(r));
      EXPECT_EQ(rep.order_checked, 30u);
      EXPECT_TRUE(rep.symmetric && rep.g_odd && rep.h_even && rep.psi_odd && rep.equ1_holds)
          << family_name(fam) << " r=" << r;
      EXPECT_FALSE(rep.first_failure.has_value());
    }
  }
}

TEST(Symmetry, MonomialCounterexample) {
  // f = 1 gives P_n = x^n, which is not symmetric about any a != 0.
  const auto rep = characterize(TruncatedSeries::constant(1, 10), TruncatedSeries::variable(10), 1);
  EXPECT_FALSE(rep.symmetric);
  EXPECT_FALSE(rep.h_even);
  EXPECT_FALSE(rep.psi_odd);
  EXPECT_FALSE(rep.equ1_holds);
  ASSERT_TRUE(rep.first_failure);
  EXPECT_EQ(rep.first_failure->n, 1u);
}

TEST(Symmetry, VerdictsAgreeOnRandomSeries) {
  testing::RationalGen gen(404);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> c(9);
    for (auto& v : c) v = gen.next(3);
    const Rational a = i % 2 ? Rational(1) : gen.next(3);
    const auto rep = characterize(TruncatedSeries(c), TruncatedSeries::variable(8), a);
    EXPECT_EQ(rep.symmetric, rep.equ1_holds);
    EXPECT_EQ(rep.symmetric, rep.h_even);
  }
}

TEST(Symmetry, NonzeroGAtZeroRejected) {
  EXPECT_THROW(characterize(TruncatedSeries::constant(1, 4), TruncatedSeries::constant(1, 4), 1), DomainError);
}

TEST(Symmetry, DualReconstruction) {
  struct Case {
    TruncatedSeries f;
    Rational a;
  };
  const std::size_t N = 20;
  const std::vector<Case> cases{
      {bernoulli_f_series(1, false, N + 1), 1},  {euler_f_series(1, false, N + 1), 1},
      {bernoulli_f_series(2, true, N + 1), 1},   {bernoulli_f_series(3, true, N + 1), 1},
      {euler_f_series(2, true, N + 1), 1},       {euler_f_series(3, true, N + 1), 1},
      {bernoulli_f_series(3, false, N + 1), 3},  {euler_f_series(2, false, N + 1), 2},
  };
  for (const auto& c : cases) {
    const auto oracle = appell_from_f(c.f, N).polynomials;
    const auto odd = decompose(c.f, c.a, Parity::Odd);
    const auto even = decompose(c.f, c.a, Parity::Even);
    EXPECT_TRUE(is_odd(odd.remainder_F));
    EXPECT_TRUE(is_even(even.remainder_F));
    for (std::size_t n = 0; n <= N; ++n) {
      EXPECT_EQ(reconstruct_euler_form(odd, n), oracle[n]) << "n=" << n;
      EXPECT_EQ(reconstruct_bernoulli_form(even, n), oracle[n]) << "n=" << n;
      EXPECT_EQ(reconstruct_bernoulli_form_printed(even, n), c.a * oracle[n]);
    }
  }
}

TEST(Symmetry, DecomposeWithValidatesParity) {
  const auto f = bernoulli_f_series(1, false, 8);
  const std::vector<Rational> ak{0, Rational::parse("-1/2")};
  const auto d = decompose_with(f, 1, Parity::Even, ak);
  EXPECT_TRUE(is_even(d.remainder_F));
  EXPECT_THROW(decompose_with(f, 1, Parity::Odd, ak), DomainError);
  EXPECT_THROW(decompose(f, 0, Parity::Odd), DomainError);
  EXPECT_THROW(reconstruct_euler_form(d, 2), DomainError);
}

TEST(Symmetry, UnknownCoefficientsAreErrors) {
  const auto d = decompose(euler_f_series(1, false, 4), 1, Parity::Odd);
  EXPECT_NO_THROW(reconstruct_euler_form(d, 4));
  EXPECT_THROW(reconstruct_euler_form(d, 6), DomainError);
  const auto cut = with_cutoff(d, 2);
  EXPECT_NO_THROW(reconstruct_euler_form(cut, 6));
  EXPECT_THROW(with_cutoff(d, 9), DomainError);
}

TEST(Symmetry, FiniteDecompositionIsSymmetric) {
  const auto d = finite_decomposition(2, Parity::Odd, {1, 0, Rational::parse("3/4")});
  std::vector<Polynomial> polys;
  for (std::size_t n = 0; n <= 10; ++n) polys.push_back(reconstruct_euler_form(d, n));
  EXPECT_TRUE(check_symmetry(polys, 2).symmetric);
}

TEST(VnSpace, BasesAndMembership) {
  for (const Rational a : {Rational(1), Rational(2), Rational::parse("1/2")}) {
    for (std::size_t n = 0; n <= 12; ++n) {
      const auto bb = vn_basis(Family::Bernoulli, n, a);
      const auto eb = vn_basis(Family::Euler, n, a);
      ASSERT_EQ(bb.size(), n / 2 + 1);
      ASSERT_EQ(eb.size(), n / 2 + 1);
      for (const auto& p : bb) {
        const std::size_t m = static_cast<std::size_t>(p.degree());
        std::vector<Polynomial> padded(m + 1);
        padded[m] = p;
        EXPECT_TRUE(check_symmetry(padded, a).symmetric);
        const auto coords = vn_membership(p, n, a, Family::Euler);
        ASSERT_TRUE(coords);
        Polynomial back;
        for (std::size_t k = 0; k < eb.size(); ++k) back += (*coords)[k] * eb[k];
        EXPECT_EQ(back, p);
      }
      for (const auto& p : eb) {
        const auto coords = vn_membership(p, n, a, Family::Bernoulli);
        ASSERT_TRUE(coords);
        Polynomial back;
        for (std::size_t k = 0; k < bb.size(); ++k) back += (*coords)[k] * bb[k];
        EXPECT_EQ(back, p);
      }
    }
  }
}

TEST(VnSpace, NonMembersAndErrors) {
  // x is not symmetric about a = 1 with the right parity for n = 2.
  EXPECT_FALSE(vn_membership(Polynomial::x(), 2, 1, Family::Bernoulli));
  EXPECT_THROW(vn_membership(Polynomial::monomial(1, 5), 4, 1, Family::Euler), DomainError);
  EXPECT_THROW(vn_basis(Family::Euler, 3, 0), DomainError);
  const auto coords = vn_membership(Polynomial{Rational::parse("1/6"), -1, 1}, 2, 1, Family::Bernoulli);
  ASSERT_TRUE(coords);
  EXPECT_EQ(*coords, (std::vector<Rational>{1, 0}));
}

}  // namespace
}  // namespace appell
