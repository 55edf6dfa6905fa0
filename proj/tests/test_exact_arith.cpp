#include <gtest/gtest.h>

#include "appell/errors.hpp"
#include "appell/polynomial.hpp"
#include "appell/series.hpp"
#include "test_support.hpp"

namespace appell {
namespace {

using testing::RationalGen;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rational::parse("-0/7").str(), "0");
  EXPECT_EQ(Rational::parse("12").str(), "12");
  EXPECT_TRUE(is_canonical(Rational::parse("10/4")));
  EXPECT_EQ(Rational(Integer(4), Integer(-6)), Rational::parse("-2/3"));
}

TEST(Rational, RejectsBadInput) {
  for (const char* bad : {"", "1.5", "1e3", "1/0", " 1", "1/", "/2", "a", "6/-4"})
    EXPECT_THROW(Rational::parse(bad), DomainError) << bad;
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, PowersFactorialsBinomials) {
  EXPECT_EQ(pow(Rational::parse("2/3"), 3), Rational::parse("8/27"));
  EXPECT_EQ(pow(Rational::parse("2/3"), -2), Rational::parse("9/4"));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(10, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
}

TEST(RationalProperty, FieldAxioms) {
  RationalGen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen.next(), b = gen.next(), c = gen.next();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE(is_canonical(a * b - c));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Polynomial, BasicsAndPrinting) {
  const Polynomial p{Rational::parse("1/6"), -1, 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(to_string(p), "x^2 - x + 1/6");
  EXPECT_EQ(p(Rational::parse("1/2")), Rational::parse("-1/12"));
  EXPECT_EQ((Polynomial{0, 0}).degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(derivative(p), (Polynomial{-1, 2}));
  EXPECT_EQ(compose_affine(Polynomial::x(), 2, 3), (Polynomial{3, 2}));
}

TEST(PolynomialProperty, RingAxioms) {
  RationalGen gen(2024);
  for (int i = 0; i < 120; ++i) {
    const Polynomial p = gen.poly(12), q = gen.poly(12), r = gen.poly(12);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * Polynomial::constant(1), p);
    EXPECT_TRUE((p + (-p)).is_zero());
    const Rational x = gen.next();
    EXPECT_EQ((p * q)(x), p(x) * q(x));
  }
}

TEST(PolynomialProperty, ComposeAffineInverts) {
  RationalGen gen(7);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = gen.poly(12);
    Rational alpha = gen.next();
    if (alpha.is_zero()) alpha = 1;
    const Rational beta = gen.next();
    // q(x) = p(alpha x + beta), so p(y) = q((y - beta)/alpha)
    const Polynomial q = compose_affine(p, alpha, beta);
    EXPECT_EQ(compose_affine(q, Rational(1) / alpha, -beta / alpha), p);
    const Rational x = gen.next();
    EXPECT_EQ(q(x), p(alpha * x + beta));
  }
}

TEST(Series, ReciprocalAndErrors) {
  RationalGen gen(99);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c(gen.index(1, 15) + 1);
    for (auto& v : c) v = gen.next();
    if (c[0].is_zero()) c[0] = 1;
    const TruncatedSeries s(c);
    EXPECT_EQ(s * reciprocal(s), TruncatedSeries::constant(1, s.order()));
  }
  EXPECT_THROW(reciprocal(TruncatedSeries::variable(4)), DomainError);
  EXPECT_THROW(exp(TruncatedSeries::constant(1, 4)), DomainError);
  EXPECT_THROW(TruncatedSeries::variable(3).truncated(5), DomainError);
}

TEST(SeriesProperty, ExpIsHomomorphism) {
  RationalGen gen(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t order = gen.index(1, 12);
    std::vector<Rational> a(order + 1), b(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
      a[k] = gen.next();
      b[k] = gen.next();
    }
    const TruncatedSeries sa(a), sb(b);
    EXPECT_EQ(exp(sa + sb), exp(sa) * exp(sb));
  }
}

TEST(Series, ExpOfVariableIsExponential) {
  const auto e = exp(TruncatedSeries::variable(10));
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(e.exponential_coefficients()[k], Rational(1));
}

TEST(Series, ParityAndReflection) {
  const TruncatedSeries s(std::vector<Rational>{1, 2, 3, 4, 5});
  const auto parts = parity_parts(s);
  EXPECT_TRUE(is_even(parts.even));
  EXPECT_TRUE(is_odd(parts.odd));
  EXPECT_EQ(parts.even + parts.odd, s);
  EXPECT_EQ(s.reflected(), parts.even - parts.odd);
  EXPECT_EQ(first_odd_violation(s), 0u);
  EXPECT_EQ(first_even_violation(s), 1u);
}

TEST(Series, PowMatchesRepeatedProduct) {
  const TruncatedSeries s(std::vector<Rational>{1, Rational::parse("1/2"), Rational::parse("-1/3"), 4});
  EXPECT_EQ(pow(s, 3), s * s * s);
  EXPECT_EQ(pow(s, 1), s);
}

}  // namespace
}  // namespace appell
