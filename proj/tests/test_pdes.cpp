#include "adjoint/pdes.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace adjoint;

namespace {

Matrix<Rational> identity(int n) {
  Matrix<Rational> m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix<Rational> random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  Matrix<Rational> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[i][j] = m[j][i] = d(rng);
  return m;
}

const InvarianceResult& find(const std::vector<InvarianceResult>& rs, const std::string& name) {
  for (auto& r : rs)
    if (r.action == name) return r;
  throw std::runtime_error("missing " + name);
}

}  // namespace

TEST(TypeA, Determinants) {
  EXPECT_EQ(pde_type_A(1).to_text(), "u11");
  EXPECT_EQ(pde_type_A(2).to_text(), "u11*u22 - u12^2");
  auto a3 = pde_type_A(3);
  // Six permutation terms; the two 3-cycles merge on symmetric entries.
  EXPECT_EQ(a3.poly.size(), 5u);
  EXPECT_EQ(evaluate_on(a3.poly, identity(3)), 1);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    auto u = random_symmetric(3, rng);
    EXPECT_EQ(evaluate_on(a3.poly, u), determinant(u));
  }
  EXPECT_THROW(pde_type_A(0), PreconditionError);
}

TEST(MinorTraces, SymbolicMatchesNumeric) {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 4}) {
    auto u = random_symmetric(n, rng);
    for (int i = 0; i <= n; ++i)
      EXPECT_EQ(evaluate_on(principal_minor_trace(n, i), u), principal_minor_trace(u, i)) << n << " " << i;
    EXPECT_EQ(principal_minor_trace(u, 0), 1);
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += u[i][i];
    EXPECT_EQ(principal_minor_trace(u, 1), tr);
    EXPECT_EQ(principal_minor_trace(u, n), determinant(u));
  }
  EXPECT_THROW(principal_minor_trace(3, 4), PreconditionError);
  EXPECT_THROW(principal_minor_trace(3, -1), PreconditionError);
}

TEST(TypeD, ClosedFormIdentity) {
  auto f = pde_type_D(4);
  EXPECT_EQ(f.poly, pde_D4_closed_form());
  // At the identity tr U^(i) = C(4,i), so F(I) = sum (-1)^i C(4,i)^3.
  BigInt expected = 0;
  for (int i = 0; i <= 4; ++i) expected += (i % 2 ? -1 : 1) * binomial(4, i) * binomial(4, i) * binomial(4, i);
  EXPECT_EQ(evaluate_on(f.poly, identity(4)), Rational(expected));
  EXPECT_EQ(expected, 90);
}

TEST(TypeD, SixByMatchesDefiningSumNumerically) {
  auto f = pde_type_D(6);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 4; ++k) {
    auto u = random_symmetric(6, rng);
    Rational sum = 0;
    for (int i = 0; i <= 6; ++i)
      sum += Rational((i % 2 ? -1 : 1) * binomial(6, i)) * principal_minor_trace(u, i) * principal_minor_trace(u, 6 - i);
    EXPECT_EQ(evaluate_on(f.poly, u), sum);
  }
  EXPECT_TRUE(f.poly.is_homogeneous());
  EXPECT_EQ(f.poly.total_degree(), 6);
}

TEST(TypeD, Rejections) {
  EXPECT_THROW(pde_type_D(5), PreconditionError);
  EXPECT_THROW(pde_type_D(2), PreconditionError);
  EXPECT_THROW(pde_type_D_invariant(3), PreconditionError);
}

TEST(Pluecker, Degrees) {
  EXPECT_EQ(pluecker_degree(pde_type_A(3).poly, 3), 1);
  EXPECT_EQ(pluecker_degree(pde_type_D(4).poly, 4), 2);
  EXPECT_EQ(pluecker_degree(pde_type_D_invariant(6).poly, 6), 2);
  EXPECT_EQ(chow_transform_g2().pluecker_degree, 3);
}

TEST(G2, ChowTransformIsReferenceCubic) {
  auto c = chow_transform_g2();
  auto reference = normalize(IntPolynomial::parse(g2_reference_cubic_text(), matrix_variables(2)));
  EXPECT_EQ(c.poly, reference);
  EXPECT_EQ(c.to_text(), "u11*u22^3 - u12^2*u22^2 - 18*u11*u12*u22 + 16*u12^3 + 27*u11^2");
  auto vars = c.poly.variables_ptr();
  auto zero = IntPolynomial(vars);
  auto u11 = IntPolynomial::variable(vars, 0), u12 = IntPolynomial::variable(vars, 1);
  EXPECT_EQ(c.poly.substitute({u11, zero, zero}), u11 * u11 * BigInt(27));
  EXPECT_EQ(c.poly.substitute({zero, u12, zero}), u12 * u12 * u12 * BigInt(16));
}

TEST(G2, StrippedBranch) {
  auto r = g2_stripped_branch_resultant();
  EXPECT_EQ(r.total_degree(), 0);
  EXPECT_FALSE(r.is_zero_poly());
  EXPECT_TRUE(g2_cubic_on_stripped_point().is_zero_poly());
}

TEST(B3, QuadricsMatchReferenceList) {
  auto d = b3_data();
  ASSERT_EQ(d.substituted.size(), 6u);
  for (size_t k = 0; k < 6; ++k) EXPECT_EQ(d.substituted[k], d.reference[k]) << k;
  auto x = [&](int i) { return IntPolynomial::variable(d.reference[4].variables_ptr(), i); };
  EXPECT_EQ(d.reference[4], x(0) * x(0) + x(1) * x(1) + x(2) * x(2));
}

TEST(B3, InvariantShape) {
  auto f = b3_data().invariant;
  EXPECT_EQ(f.poly.size(), 123u);
  EXPECT_TRUE(f.poly.is_homogeneous());
  EXPECT_EQ(f.poly.total_degree(), 6);
  EXPECT_EQ(f.pluecker_degree, 4);
  auto lead = IntPolynomial::parse("u22^2*u33^4", matrix_variables(3));
  EXPECT_EQ(f.poly.leading_term().first, lead.leading_term().first);
  auto u12 = IntPolynomial::parse("u12^6", matrix_variables(3)).leading_term().first;
  EXPECT_EQ(f.poly.coefficient(u12), 4);
}

TEST(B3, MembershipSampling) {
  auto r = verify_b3_membership(60, 9, 1);
  EXPECT_EQ(r.failures, 0);
  EXPECT_EQ(r.zeros, 60);
  EXPECT_GE(r.off_nonzero * 100, 99 * r.off_samples);
  auto p = verify_b3_membership(60, 9, 4);
  EXPECT_EQ(p.zeros, r.zeros);
  EXPECT_EQ(p.resampled, r.resampled);
  EXPECT_EQ(p.off_nonzero, r.off_nonzero);
}

TEST(B3, NullConicPoints) {
  for (int k = -3; k <= 3; ++k) {
    auto z = null_conic_point(Rational(k, 2));
    EXPECT_TRUE((z[0] * z[0] + z[1] * z[1] + z[2] * z[2]).is_zero());
  }
}

TEST(Invariance, OrthogonalAndFractional) {
  Matrix<Rational> rot = identity(4);
  rot[0][0] = rot[1][1] = Rational(3, 5);
  rot[0][1] = Rational(4, 5);
  rot[1][0] = Rational(-4, 5);
  std::vector<MatrixAction> acts{MatrixAction::congruence("rotation", rot),
                                 MatrixAction::fractional("inversion", 0, 1, -1, 0),
                                 MatrixAction::fractional("translation", 1, 0, 1, 1),
                                 MatrixAction::fractional("mixed", 2, 1, 3, 2)};
  auto reference = verify_invariance(pde_type_D(4), acts, 6, 1);
  EXPECT_TRUE(find(reference, "rotation").consistent);
  EXPECT_EQ(find(reference, "rotation").k, 0);
  EXPECT_EQ(find(reference, "rotation").multiplier, Rational(1));
  EXPECT_TRUE(find(reference, "inversion").consistent);
  EXPECT_EQ(find(reference, "inversion").k, 2);
  EXPECT_FALSE(find(reference, "translation").consistent);
  for (int n : {4, 6}) {
    Matrix<Rational> r = identity(n);
    r[0][0] = r[1][1] = Rational(3, 5);
    r[0][1] = Rational(4, 5);
    r[1][0] = Rational(-4, 5);
    acts[0] = MatrixAction::congruence("rotation", r);
    for (auto& res : verify_invariance(pde_type_D_invariant(n), acts, 5, 2)) {
      EXPECT_TRUE(res.consistent) << n << " " << res.action;
      EXPECT_EQ(res.multiplier, Rational(1)) << n << " " << res.action;
      EXPECT_GE(res.checked, 3);
    }
  }
}

TEST(Invariance, DeterminantMultipliers) {
  Matrix<Rational> shear{{1, 2, 0}, {0, 1, 0}, {1, 1, 1}};
  auto rs = verify_invariance(pde_type_A(3),
                              {MatrixAction::congruence("shear", shear), MatrixAction::fractional("inversion", 0, 1, -1, 0),
                               MatrixAction::fractional("scaling", 2, 0, 0, Rational(1, 2))},
                              5, 3);
  EXPECT_EQ(find(rs, "shear").k, 0);
  EXPECT_EQ(find(rs, "shear").multiplier, Rational(determinant(shear) * determinant(shear)));
  EXPECT_EQ(find(rs, "inversion").k, 2);
  EXPECT_EQ(find(rs, "inversion").multiplier, Rational(-1));
  EXPECT_EQ(find(rs, "scaling").multiplier, Rational(1, 64));
  for (auto& r : rs) EXPECT_TRUE(r.consistent) << r.action;
  EXPECT_THROW(MatrixAction::fractional("bad", 1, 1, 1, 1), PreconditionError);
}

TEST(Quartic, BasicProperties) {
  using V = TwoByN<Rational>;
  V a{std::vector<Rational>{1, 0}, std::vector<Rational>{0, 0}};
  V b{std::vector<Rational>{0, 0}, std::vector<Rational>{1, 0}};
  V c{std::vector<Rational>{0, 1}, std::vector<Rational>{0, 0}};
  V d{std::vector<Rational>{0, 0}, std::vector<Rational>{0, 1}};
  EXPECT_EQ(evaluate_q(a, a, a, a), 0);
  // Single-term oracle: eps(e1,e2) = 1 and the bracket is <e1,e3><e2,e4> - <e2,e3><e1,e4>.
  EXPECT_EQ(evaluate_q_raw(a, d, a, d), 1);
  EXPECT_EQ(evaluate_q_raw(a, b, a, b), 0);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> dist(-4, 4);
  auto rnd = [&] {
    V v{std::vector<Rational>(3), std::vector<Rational>(3)};
    for (auto& row : v)
      for (auto& x : row) x = dist(rng);
    return v;
  };
  auto v1 = rnd(), v2 = rnd(), v3 = rnd(), v4 = rnd();
  Rational q = evaluate_q(v1, v2, v3, v4);
  EXPECT_EQ(evaluate_q(v2, v1, v4, v3), q);
  EXPECT_EQ(evaluate_q(v3, v4, v1, v2), q);
  EXPECT_EQ(evaluate_q(v4, v2, v3, v1), q);
  V short_v{std::vector<Rational>{1}, std::vector<Rational>{0}};
  EXPECT_THROW(evaluate_q(a, b, c, short_v), PreconditionError);
}

TEST(Quartic, PowerFastPathMatchesGeneral) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int n : {2, 3, 4})
    for (int k = 0; k < 4; ++k) {
      std::vector<std::array<Rational, 2>> xi(n);
      for (auto& x : xi) x = {Rational(dist(rng)), Rational(dist(rng))};
      EXPECT_EQ(evaluate_qn_diagonal(xi), evaluate_qn(SymplecticFrame<Rational>::diagonal(xi))) << n;
    }
  std::vector<std::array<GaussianRational, 2>> g{{GaussianRational(1), GaussianRational(0, 1)},
                                                 {GaussianRational(2), GaussianRational(1, 1)},
                                                 {GaussianRational(0, 1), GaussianRational(3)}};
  EXPECT_TRUE((evaluate_qn_diagonal(g) - evaluate_qn(SymplecticFrame<GaussianRational>::diagonal(g))).is_zero());
}

TEST(Quartic, PowerValues) {
  std::vector<std::array<Rational, 2>> two{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  EXPECT_EQ(evaluate_qn_diagonal(two), 2);  // 2 eps^4
  std::vector<std::array<Rational, 2>> same(3, {Rational(2), Rational(3)});
  EXPECT_EQ(evaluate_qn_diagonal(same), 0);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n : {3, 4})
    for (int k = 0; k < 10; ++k) {
      std::vector<std::array<Rational, 2>> xi(n);
      for (auto& x : xi) x = {Rational(static_cast<int>(u(rng) * 1000), 1000), Rational(static_cast<int>(u(rng) * 1000), 1000)};
      EXPECT_GT(evaluate_qn_diagonal(xi), 0);
    }
}

TEST(Quartic, PowerRejections) {
  auto f = SymplecticFrame<Rational>::diagonal({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  f.vectors[1][0][0] = 1;
  f.vectors[1][1][0] = 1;
  EXPECT_FALSE(f.is_lagrangian());
  EXPECT_THROW(evaluate_qn(f), PreconditionError);
  std::vector<std::array<Rational, 2>> six(6, {Rational(1), Rational(2)});
  EXPECT_THROW(evaluate_qn(SymplecticFrame<Rational>::diagonal(six)), PreconditionError);
}

TEST(Subadjoint, Degrees) {
  auto deg = [](const char* t) { return subadjoint_degree(CartanType::parse(t)).value; };
  EXPECT_EQ(deg("A3"), 2);
  EXPECT_EQ(deg("B3"), 4);
  EXPECT_EQ(deg("D4"), 6);
  EXPECT_EQ(deg("D5"), 10);
  EXPECT_EQ(deg("E6"), 42);
  EXPECT_EQ(deg("E7"), 286);
  EXPECT_EQ(deg("E8"), 13188);
  EXPECT_EQ(deg("F4"), 16);
  EXPECT_EQ(deg("G2"), 3);
  EXPECT_THROW(deg("C3"), PreconditionError);
}

TEST(MinorPolynomialText, RoundTrips) {
  for (auto& p : {pde_type_D(4).poly, b3_data().invariant.poly, chow_transform_g2().poly}) {
    EXPECT_EQ(IntPolynomial::parse(p.to_text(), p.variables_ptr()), p);
    EXPECT_EQ(IntPolynomial::from_json(p.to_json()), p);
  }
}
