#include <gtest/gtest.h>

#include <random>

#include "congrlab/poly.hpp"
#include "congrlab/quadext.hpp"
#include "congrlab/rational.hpp"
#include "test_util.hpp"

using namespace congrlab;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

Rational random_rational(std::mt19937_64& rng) {
  long a = static_cast<long>(rng() % 20001) - 10000;
  long b = static_cast<long>(rng() % 5000) + 1;
  return q(a, b);
}

Rational random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    auto r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

QuadExt random_quad(std::mt19937_64& rng, std::int64_t d) { return QuadExt(random_rational(rng), random_rational(rng), d); }

Poly derivative(const Poly& f) {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < f.coefficients().size(); ++i) c.push_back(f.coefficients()[i] * Rational(static_cast<long>(i)));
  return Poly(std::move(c));
}

Poly random_poly(std::mt19937_64& rng) {
  std::vector<Rational> c(rng() % 12);
  for (auto& x : c) x = random_rational(rng);
  return Poly(std::move(c));
}

}  // namespace

TEST(Rational, CanonicalForm) {
  auto x = q(6, -4);
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(q(0, -5).denominator(), 1);
  EXPECT_EQ(q(0, 7), Rational());
  EXPECT_THROW(q(1, 0), Error);
  EXPECT_EQ(Rational::parse("-14/21"), q(-2, 3));
  EXPECT_EQ(Rational::parse("5"), q(5));
  EXPECT_EQ(q(7, 200).to_fraction_string(), "7/200");
  EXPECT_EQ(q(3).to_fraction_string(), "3/1");
}

TEST(Rational, DivisionByZero) {
  try {
    (void)(q(1) / Rational());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Rational, ValuationExamples) {
  EXPECT_EQ(p_adic_valuation(q(16807, 1920), 7), 5);
  EXPECT_EQ(p_adic_valuation(q(49, 20), 7), 2);
  EXPECT_EQ(p_adic_valuation(Rational(), 7), kInfiniteValuation);
  EXPECT_EQ(p_adic_valuation(q(5, 49), 7), -2);
}

TEST(Rational, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, Rational());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Rational(1));
    }
  }
}

TEST(Rational, ValuationAdditive) {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (int i = 0; i < 1000; ++i) {
      auto a = random_nonzero(rng), b = random_nonzero(rng);
      ASSERT_EQ(p_adic_valuation(a * b, p), p_adic_valuation(a, p) + p_adic_valuation(b, p));
    }
  }
}

TEST(Poly, Examples) {
  auto x = Poly::x();
  auto f = Poly(q(3)) - x * x;
  auto g = f.integrate_from_zero();
  EXPECT_EQ(g, Poly(std::vector<Rational>{q(0), q(3), q(0), q(-1, 3)}));
  auto b2 = x * x - x + Poly(q(1, 6));
  EXPECT_EQ(b2.evaluate(q(1, 3)), q(-1, 18));
  EXPECT_EQ((x * x).compose(x.scale(q(2))), Poly::monomial(q(4), 2));
}

TEST(Poly, ZeroIsCanonical) {
  auto x = Poly::x();
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x - x).degree(), -1);
  EXPECT_EQ(Poly(std::vector<Rational>{q(0), q(0)}), Poly());
  EXPECT_EQ(x.scale(Rational()), Poly());
}

TEST(Poly, DerivativeInvertsIntegral) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    auto f = random_poly(rng);
    ASSERT_EQ(derivative(f.integrate_from_zero()), f);
    ASSERT_TRUE(f.integrate_from_zero().evaluate(Rational()).is_zero());
  }
}

TEST(Poly, RingAxiomsAndEvaluationHomomorphism) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    auto f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    auto at = random_rational(rng);
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ((f * g).evaluate(at), f.evaluate(at) * g.evaluate(at));
    ASSERT_EQ(f.compose(g).evaluate(at), f.evaluate(g.evaluate(at)));
  }
}

TEST(QuadExt, Examples) {
  auto php = QuadExt(q(1, 2), q(1, 2), 5);
  auto phm = QuadExt(q(1, 2), q(-1, 2), 5);
  EXPECT_EQ(php * phm, QuadExt::embed(q(-1), 5));
  EXPECT_EQ(php + phm, QuadExt::embed(q(1), 5));
  EXPECT_EQ(QuadExt(q(2), q(3), 5).conjugate(), QuadExt(q(2), q(-3), 5));
  EXPECT_EQ(php.conjugate(), phm);
  EXPECT_EQ(QuadExt::sqrt(5) * QuadExt::sqrt(5), QuadExt::embed(q(5), 5));
}

TEST(QuadExt, Rejections) {
  EXPECT_EQ(error_kind([] { (void)(QuadExt::sqrt(5) + QuadExt::sqrt(2)); }), ErrorKind::MixedExtension);
  EXPECT_EQ(error_kind([] { (void)(QuadExt::sqrt(5) * QuadExt::sqrt(3)); }), ErrorKind::MixedExtension);
  EXPECT_EQ(error_kind([] { QuadExt(q(1), q(1), 20); }), ErrorKind::InvalidArgument);
}

TEST(QuadExt, FieldAxiomsAndNorm) {
  std::mt19937_64 rng(15);
  for (std::int64_t d : {5, 2, -1, 13}) {
    for (int i = 0; i < 500; ++i) {
      auto a = random_quad(rng, d), b = random_quad(rng, d), c = random_quad(rng, d);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
      ASSERT_EQ(a * a.conjugate(), QuadExt::embed(a.norm(), d));
    }
  }
}
