#include "adjoint/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace adjoint;

namespace {

auto vars3() { return std::make_shared<const Variables>(Variables{"u11", "u12", "u22"}); }

IntPolynomial random_poly(std::mt19937& rng, const std::shared_ptr<const Variables>& v) {
  std::uniform_int_distribution<int> e(0, 3), c(-20, 20), k(1, 8);
  IntPolynomial p(v);
  for (int t = k(rng); t > 0; --t) {
    Exponents ex(v->size());
    for (auto& x : ex) x = e(rng);
    p.add_term(ex, c(rng));
  }
  return p;
}

}  // namespace

TEST(Polynomial, GradedLexOrder) {
  auto v = vars3();
  auto u11 = IntPolynomial::variable(v, 0), u12 = IntPolynomial::variable(v, 1), u22 = IntPolynomial::variable(v, 2);
  EXPECT_EQ((u11 + u12 + u22).to_text(), "u22 + u12 + u11");
  EXPECT_EQ((u11 * u22 - u12 * u12).to_text(), "u11*u22 - u12^2");
  EXPECT_EQ((u11 * u11 * u11 + u12 * u22).leading_term().first, (Exponents{3, 0, 0}));
}

TEST(Polynomial, TextRoundTrip) {
  std::mt19937 rng(11);
  auto v = vars3();
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng, v);
    EXPECT_EQ(IntPolynomial::parse(p.to_text(), v), p) << p.to_text();
  }
}

TEST(Polynomial, JsonRoundTrip) {
  std::mt19937 rng(12);
  auto v = vars3();
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(rng, v);
    EXPECT_EQ(IntPolynomial::from_json(p.to_json()), p);
  }
}

TEST(Polynomial, ParsesAnyFactorOrderAndParentheses) {
  auto v = vars3();
  EXPECT_EQ(IntPolynomial::parse("+3*u22*u11^2 -1*u12", v), IntPolynomial::parse("3*u11^2*u22 - u12", v));
  EXPECT_EQ(IntPolynomial::parse("(u11+u12)^2", v), IntPolynomial::parse("u11^2 + 2*u11*u12 + u12^2", v));
  EXPECT_EQ(IntPolynomial::parse("u11*(u12 - u22) + u11*u22", v).to_text(), "u11*u12");
  EXPECT_THROW(IntPolynomial::parse("u11 + x", v), PreconditionError);
  EXPECT_THROW(IntPolynomial::parse("u11 +", v), PreconditionError);
  EXPECT_THROW(IntPolynomial::parse("(u11", v), PreconditionError);
}

TEST(Polynomial, RingAxiomsOnSamples) {
  std::mt19937 rng(13);
  auto v = vars3();
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng, v), b = random_poly(rng, v), c = random_poly(rng, v);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_TRUE((a - a).is_zero_poly());
  }
}

TEST(Polynomial, EvaluateAgreesWithSubstitute) {
  std::mt19937 rng(14);
  auto v = vars3();
  auto t = std::make_shared<const Variables>(Variables{"t"});
  for (int i = 0; i < 20; ++i) {
    auto p = random_poly(rng, v);
    std::vector<IntPolynomial> images{IntPolynomial::constant(t, 2), IntPolynomial::constant(t, -3),
                                      IntPolynomial::constant(t, 5)};
    auto sub = p.substitute(images);
    BigInt direct = p.evaluate(std::vector<BigInt>{2, -3, 5});
    EXPECT_EQ(sub.coefficient(Exponents{0}), direct);
    EXPECT_EQ(p.evaluate(std::vector<Rational>{2, -3, 5}), Rational(direct));
  }
}

TEST(Polynomial, NormalizeContentAndSign) {
  auto v = vars3();
  auto p = IntPolynomial::parse("-6*u22^2 + 4*u11", v);
  EXPECT_EQ(normalize(p).to_text(), "3*u22^2 - 2*u11");
}

TEST(Polynomial, LaplaceDeterminant) {
  auto v = vars3();
  auto u11 = IntPolynomial::variable(v, 0), u12 = IntPolynomial::variable(v, 1), u22 = IntPolynomial::variable(v, 2);
  Matrix<IntPolynomial> m{{u11, u12}, {u12, u22}};
  EXPECT_EQ(laplace_determinant(m, IntPolynomial(v), IntPolynomial::constant(v, 1)).to_text(), "u11*u22 - u12^2");
}
