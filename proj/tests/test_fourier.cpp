#include <gtest/gtest.h>

#include <cmath>

#include "appell/classical.hpp"
#include "appell/errors.hpp"
#include "appell/fourier.hpp"
#include "appell/oracle.hpp"
#include "appell/symmetry.hpp"

namespace appell {
namespace {

Rational q(const char* s) { return Rational::parse(s); }

TEST(Fourier, ClassicalTolerances) {
  const auto b2 = bernoulli_fourier(2, q("1/2"), 10000);
  EXPECT_EQ(b2.exact_value, q("-1/12"));
  EXPECT_LT(b2.abs_error, 1e-4);
  const auto b4 = bernoulli_fourier(4, 0, 1000);
  EXPECT_EQ(b4.exact_value, q("-1/30"));
  EXPECT_LT(b4.abs_error, 1e-8);
  const auto e2 = euler_fourier(2, q("1/3"), 10000);
  EXPECT_EQ(e2.exact_value, q("-2/9"));
  EXPECT_LT(e2.abs_error, 1e-6);
}

TEST(Fourier, ImaginaryPartCancels) {
  for (const char* x : {"1/7", "2/5", "9/10"}) {
    EXPECT_LT(std::abs(bernoulli_fourier(3, q(x), 500).imag_residue), 1e-12);
    EXPECT_LT(std::abs(euler_fourier(3, q(x), 500).imag_residue), 1e-12);
  }
}

TEST(Fourier, DomainEnforced) {
  EXPECT_THROW(bernoulli_fourier(1, 0, 10), DomainError);
  EXPECT_THROW(bernoulli_fourier(1, 1, 10), DomainError);
  EXPECT_NO_THROW(bernoulli_fourier(2, 1, 10));
  EXPECT_THROW(bernoulli_fourier(2, q("3/2"), 10), DomainError);
  EXPECT_THROW(bernoulli_fourier(0, q("1/2"), 10), DomainError);
  EXPECT_THROW(euler_fourier(0, 0, 10), DomainError);
  EXPECT_NO_THROW(euler_fourier(1, 0, 10));
  EXPECT_THROW(euler_fourier(1, q("-1/3"), 10), DomainError);
  EXPECT_THROW(euler_order_r_fourier(2, 2, 2, 10, EulerOrderVariant::Derived), DomainError);
  EXPECT_THROW(euler_order_r_fourier(2, 2, 0, 10, EulerOrderVariant::Derived), DomainError);
}

TEST(Fourier, ReductionToClassical) {
  const auto de = decompose(euler_f_series(1, false, 12), 1, Parity::Odd);
  const auto db = decompose(bernoulli_f_series(1, false, 12), 1, Parity::Even);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const char* x : {"1/8", "1/3", "1/2", "5/6"}) {
      const auto ref_e = euler_fourier(n, q(x), 1000);
      const auto got_e = appell_fourier(de, n, q(x), 1000);
      EXPECT_LE(std::abs(got_e.partial_sum - ref_e.partial_sum), 1e-12 * std::abs(ref_e.partial_sum) + 1e-300);
      const auto ref_b = bernoulli_fourier(n, q(x), 1000);
      const auto got_b = appell_fourier(db, n, q(x), 1000);
      EXPECT_LE(std::abs(got_b.partial_sum - ref_b.partial_sum), 1e-12 * std::abs(ref_b.partial_sum) + 1e-300);
      EXPECT_EQ(got_b.exact_value, ref_b.exact_value);
    }
  }
}

TEST(Fourier, AppellWithScaledParameter) {
  // order-2 Euler, unscaled f, symmetric about a = 2
  const auto d = decompose(euler_f_series(2, false, 10), 2, Parity::Odd);
  const auto oracle = higher_oracle_polys(Family::Euler, 2, 5).polynomials;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ev = appell_fourier(d, n, q("1/2"), 4000);
    EXPECT_EQ(ev.exact_value, oracle[n](q("1/2")));
    EXPECT_LT(ev.abs_error, 1e-3);
  }
  const auto ev = euler_order_r_fourier(3, 2, q("1/2"), 1000, EulerOrderVariant::Derived);
  EXPECT_EQ(ev.exact_value, oracle[3](q("1/2")));
  EXPECT_LT(ev.abs_error, 1e-6);
}

TEST(Fourier, LiteralVariantsAreReported) {
  // Literal order-r expansion and the exact value disagree for r >= 2.
  const auto lit = euler_order_r_fourier(3, 2, q("1/2"), 1000, EulerOrderVariant::Literal);
  EXPECT_GT(lit.abs_error, 1e-2);
  const auto one = euler_order_r_fourier(3, 1, q("1/2"), 1000, EulerOrderVariant::Literal);
  EXPECT_LT(one.abs_error, 1e-6);
}

TEST(Fourier, ConvergenceProbeIsMonotone) {
  const std::vector<std::size_t> Ms{100, 1000, 10000};
  const std::vector<FourierTarget> targets{BernoulliTarget{2}, BernoulliTarget{3}, EulerTarget{2}, EulerTarget{3},
                                           EulerOrderTarget{2, 2, EulerOrderVariant::Derived}};
  for (const auto& t : targets) {
    const auto probe = convergence_probe(t, q("1/4"), Ms);
    ASSERT_EQ(probe.size(), 3u);
    EXPECT_TRUE(error_decays(probe));
    EXPECT_GT(probe[0].abs_error, probe[1].abs_error);
  }
  const std::vector<std::size_t> bad{100, 100};
  EXPECT_THROW(convergence_probe(BernoulliTarget{2}, q("1/4"), bad), DomainError);
}

TEST(Fourier, ErrorDecayAllowsOnlyFloorStalls) {
  FourierEvaluation a, b;
  a.exact_value = b.exact_value = Rational::parse("11/64");
  a.abs_error = 1e-9;
  b.abs_error = 2e-9;
  EXPECT_FALSE(error_decays(std::vector<FourierEvaluation>{a, b}));
  a.abs_error = 2.8e-17;
  b.abs_error = 5.6e-17;
  EXPECT_TRUE(at_rounding_floor(b));
  EXPECT_TRUE(error_decays(std::vector<FourierEvaluation>{a, b}));
}

TEST(Fourier, BitReproducible) {
  const auto a = euler_fourier(5, q("3/7"), 5000);
  const auto b = euler_fourier(5, q("3/7"), 5000);
  EXPECT_EQ(a, b);
}

TEST(Fourier, DomainsReported) {
  const auto d = fourier_domain(BernoulliTarget{1});
  EXPECT_TRUE(d.lo_open && d.hi_open);
  EXPECT_FALSE(d.contains(0));
  EXPECT_TRUE(d.contains(q("1/2")));
  const auto r3 = fourier_domain(EulerOrderTarget{4, 3, EulerOrderVariant::Derived});
  EXPECT_EQ(r3.hi, Rational(3));
}

}  // namespace
}  // namespace appell
