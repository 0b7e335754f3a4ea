#pragma once

#include "adjoint/b3_fixture.hpp"
#include "adjoint/contact.hpp"
#include "adjoint/polynomial.hpp"

#include <numeric>
#include <optional>
#include <random>
#include <thread>

namespace adjoint {

// Polynomial in the entries u_ij (i <= j) of a symmetric n x n matrix.
struct MinorPolynomial {
  int n = 0;
  IntPolynomial poly;
  std::optional<int> pluecker_degree;

  std::string to_text() const { return poly.to_text(); }
};

inline Variables matrix_variables(int n) {
  require(n >= 1 && n <= 9, "matrix size out of range 1..9");
  Variables v;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) v.push_back("u" + std::to_string(i) + std::to_string(j));
  return v;
}

// Position of u_ij in matrix_variables(n), 0-based indices.
inline int matrix_variable_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

inline Matrix<IntPolynomial> symbolic_matrix(int n) {
  auto vars = std::make_shared<const Variables>(matrix_variables(n));
  Matrix<IntPolynomial> u(n, std::vector<IntPolynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u[i][j] = IntPolynomial::variable(vars, matrix_variable_index(n, i, j));
  return u;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<int>& idx) {
  Matrix<T> s(idx.size(), std::vector<T>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b) s[a][b] = m[idx[a]][idx[b]];
  return s;
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// Sum of the principal i x i minors; the empty minor is 1.
inline IntPolynomial principal_minor_trace(int n, int i) {
  require(i >= 0 && i <= n, "minor order out of range 0..n");
  auto u = symbolic_matrix(n);
  auto vars = u[0][0].variables_ptr();
  auto zero = IntPolynomial(vars), one = IntPolynomial::constant(vars, 1);
  IntPolynomial acc(vars);
  for_each_subset(n, i, [&](const std::vector<int>& idx) { acc += laplace_determinant(submatrix(u, idx), zero, one); });
  return acc;
}

template <class Field>
Field principal_minor_trace(const Matrix<Field>& u, int i) {
  const int n = static_cast<int>(u.size());
  require(i >= 0 && i <= n, "minor order out of range 0..n");
  Field acc(0);
  for_each_subset(n, i, [&](const std::vector<int>& idx) { acc += determinant(submatrix(u, idx)); });
  return acc;
}

// Degree in t of P(U0 + t v v^T) for random integer U0, v. Every minor is
// affine in t along such lines, so this is the degree in the minors.
inline int pluecker_degree(const IntPolynomial& p, int n, std::uint64_t seed = 7) {
  auto tv = std::make_shared<const Variables>(Variables{"t"});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  int best = -1;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> v(n);
    for (auto& x : v) x = dist(rng);
    std::vector<IntPolynomial> images(p.nvars());
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        images[matrix_variable_index(n, i, j)] = IntPolynomial::constant(tv, dist(rng)) +
                                                 IntPolynomial::variable(tv, 0) * BigInt(v[i] * v[j]);
    best = std::max(best, p.substitute(images).total_degree());
  }
  return best;
}

inline MinorPolynomial pde_type_A(int n) {
  require(n >= 1, "type A needs n >= 1");
  return {n, principal_minor_trace(n, n), 1};
}

// Sum over i of (-1)^i C(n,i) tr U^(i) tr U^(n-i).
inline MinorPolynomial pde_type_D(int n) {
  require(n >= 4 && n % 2 == 0, "the quadric PDE needs n even and n >= 4");
  std::vector<IntPolynomial> t;
  for (int i = 0; i <= n; ++i) t.push_back(principal_minor_trace(n, i));
  IntPolynomial f(t[0].variables_ptr());
  for (int i = 0; i <= n; ++i) {
    BigInt c = binomial(n, i);
    f += t[i] * t[n - i] * (i % 2 ? BigInt(-c) : c);
  }
  return {n, f, 2};
}

// Same pairing with weights 1/C(n,i), scaled to integers: the SL2-invariant
// quadratic form on S^n C^2 in the monomial basis. Unlike pde_type_D it is
// preserved by every fractional action.
inline MinorPolynomial pde_type_D_invariant(int n) {
  require(n >= 4 && n % 2 == 0, "the quadric PDE needs n even and n >= 4");
  std::vector<IntPolynomial> t;
  for (int i = 0; i <= n; ++i) t.push_back(principal_minor_trace(n, i));
  BigInt l = 1;
  for (int i = 0; i <= n; ++i) l = boost::multiprecision::lcm(l, binomial(n, i));
  IntPolynomial f(t[0].variables_ptr());
  for (int i = 0; i <= n; ++i) {
    BigInt c = l / binomial(n, i);
    f += t[i] * t[n - i] * (i % 2 ? BigInt(-c) : c);
  }
  return {n, normalize(f), 2};
}

// The n = 4 closed form 2(det U - 4 tr U tr U# + 3 (tr U^(2))^2), with the
// cofactor matrix built entry by entry.
inline IntPolynomial pde_D4_closed_form() {
  const int n = 4;
  auto u = symbolic_matrix(n);
  auto vars = u[0][0].variables_ptr();
  auto zero = IntPolynomial(vars), one = IntPolynomial::constant(vars, 1);
  IntPolynomial det = laplace_determinant(u, zero, one);
  IntPolynomial tr(vars), tr_cof(vars), tr2(vars);
  for (int i = 0; i < n; ++i) {
    tr += u[i][i];
    std::vector<int> rest;
    for (int k = 0; k < n; ++k)
      if (k != i) rest.push_back(k);
    tr_cof += laplace_determinant(submatrix(u, rest), zero, one);
    for (int j = i + 1; j < n; ++j) tr2 += u[i][i] * u[j][j] - u[i][j] * u[i][j];
  }
  return (det - tr * tr_cof * BigInt(4) + tr2 * tr2 * BigInt(3)) * BigInt(2);
}

// Binary form sum_k coeffs[k] t^k s^(degree-k).
struct BinaryForm {
  int degree = 0;
  std::vector<IntPolynomial> coeffs;
};

inline IntPolynomial sylvester_resultant(const BinaryForm& f, const BinaryForm& g) {
  const int m = f.degree, k = g.degree, size = m + k;
  require(static_cast<int>(f.coeffs.size()) == m + 1 && static_cast<int>(g.coeffs.size()) == k + 1,
          "binary form coefficient count does not match its degree");
  auto vars = f.coeffs[0].variables_ptr();
  Matrix<IntPolynomial> s(size, std::vector<IntPolynomial>(size, IntPolynomial(vars)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c <= m; ++c) s[r][r + c] = f.coeffs[m - c];
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= k; ++c) s[k + r][r + c] = g.coeffs[k - c];
  return laplace_determinant(s, IntPolynomial(vars), IntPolynomial::constant(vars, 1));
}

// Twisted cubic Y = [t^3 : t^2 s : s^3 : -3 t s^2] in coordinates [x1:x2:u1:u2].
// On the graph u = U x the second equation is t (3s^2 + u12 t^2 + u22 t s) = 0;
// the factor t is stripped and its branch is checked separately.
struct G2System {
  BinaryForm f1, g2, stripped;
};

inline G2System g2_system() {
  auto vars = std::make_shared<const Variables>(matrix_variables(2));
  auto c = [&](long v) { return IntPolynomial::constant(vars, v); };
  auto u11 = IntPolynomial::variable(vars, 0), u12 = IntPolynomial::variable(vars, 1),
       u22 = IntPolynomial::variable(vars, 2);
  G2System sys;
  sys.f1 = {3, {c(1), c(0), -u12, -u11}};   // s^3 - u12 t^2 s - u11 t^3
  sys.g2 = {2, {c(3), u22, u12}};           // 3s^2 + u22 t s + u12 t^2
  sys.stripped = {1, {c(0), c(1)}};         // t
  return sys;
}

inline MinorPolynomial chow_transform_g2() {
  auto sys = g2_system();
  MinorPolynomial out{2, normalize(sylvester_resultant(sys.f1, sys.g2)), std::nullopt};
  out.pluecker_degree = pluecker_degree(out.poly, 2);
  return out;
}

// On the stripped branch t = 0 the first equation reads s^3 = 0, so it has no
// projective solution: Res(f1, t) is a nonzero constant.
inline IntPolynomial g2_stripped_branch_resultant() {
  auto sys = g2_system();
  return sylvester_resultant(sys.f1, sys.stripped);
}

// Restriction of the cubic to the planes through [1:0:0:0] in Y (u11 = u12 = 0).
inline IntPolynomial g2_cubic_on_stripped_point() {
  auto p = chow_transform_g2().poly;
  auto vars = p.variables_ptr();
  return p.substitute({IntPolynomial(vars), IntPolynomial(vars), IntPolynomial::variable(vars, 2)});
}

inline const char* g2_reference_cubic_text() {
  return "27*u11^2 - u12^2*u22^2 + u11*u22^3 + 16*u12^3 - 18*u11*u12*u22";
}

struct B3Data {
  std::vector<IntPolynomial> ideal_generators;  // in x1,x2,x3,u1,u2,u3
  std::vector<IntPolynomial> substituted;       // in x1,x2,x3,u11,...,u33, reference order
  std::vector<IntPolynomial> reference;           // same ring
  MinorPolynomial invariant;
};

inline std::vector<std::string> b3_reference_quadric_texts() {
  return {
      "x1*(u12*x1+u22*x2+u23*x3)-x2*(u11*x1+u12*x2+u13*x3)",
      "x1*(u13*x1+u23*x2+u33*x3)-x3*(u11*x1+u12*x2+u13*x3)",
      "x2*(u13*x1+u23*x2+u33*x3)-x3*(u12*x1+u22*x2+u23*x3)",
      "u11*(x1)^2+2*u12*x2*x1+u22*(x2)^2+u33*(x3)^2+2*x3*(u13*x1+u23*x2)",
      "(x1)^2+(x2)^2+(x3)^2",
      "(u11*x1+u12*x2+u13*x3)^2+(u12*x1+u22*x2+u23*x3)^2+(u13*x1+u23*x2+u33*x3)^2",
  };
}

inline B3Data b3_data() {
  auto gvars = std::make_shared<const Variables>(Variables{"x1", "x2", "x3", "u1", "u2", "u3"});
  B3Data d;
  for (const char* g : {"x1*u2-x2*u1", "x1*u3-x3*u1", "x2*u3-x3*u2", "x1^2+x2^2+x3^2", "x1*u1+x2*u2+x3*u3",
                        "u1^2+u2^2+u3^2"})
    d.ideal_generators.push_back(IntPolynomial::parse(g, gvars));

  Variables qv{"x1", "x2", "x3"};
  for (auto& s : matrix_variables(3)) qv.push_back(s);
  auto qvars = std::make_shared<const Variables>(qv);
  std::vector<IntPolynomial> images;
  for (int k = 0; k < 3; ++k) images.push_back(IntPolynomial::variable(qvars, k));
  for (int i = 0; i < 3; ++i) {
    IntPolynomial ui(qvars);
    for (int j = 0; j < 3; ++j)
      ui += IntPolynomial::variable(qvars, 3 + matrix_variable_index(3, i, j)) * images[j];
    images.push_back(ui);
  }
  // The reference list has the fourth and fifth generators swapped.
  for (int k : {0, 1, 2, 4, 3, 5}) d.substituted.push_back(d.ideal_generators[k].substitute(images));
  for (auto& t : b3_reference_quadric_texts()) d.reference.push_back(IntPolynomial::parse(t, qvars));

  d.invariant = {3, IntPolynomial::parse(fixtures::kB3InvariantText, matrix_variables(3)), std::nullopt};
  d.invariant.pluecker_degree = pluecker_degree(d.invariant.poly, 3);
  return d;
}

inline std::vector<GaussianRational> symmetric_point(const Matrix<GaussianRational>& u) {
  const int n = static_cast<int>(u.size());
  std::vector<GaussianRational> p;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.push_back(u[i][j]);
  return p;
}

// Null conic point (1 - p^2, i(1 + p^2), 2p).
inline std::array<GaussianRational, 3> null_conic_point(const Rational& p) {
  return {GaussianRational(1 - p * p), GaussianRational(0, 1 + p * p), GaussianRational(2 * p)};
}

inline std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

template <class F>
void parallel_for(int count, int workers, F&& body) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

struct B3MembershipReport {
  int samples = 0;
  int zeros = 0;
  int failures = 0;
  int resampled = 0;
  int off_samples = 0;
  int off_nonzero = 0;
};

struct B3Sample {
  bool zero = false;
  int resampled = 0;
};

inline B3Sample b3_on_variety_sample(const IntPolynomial& f, std::uint64_t seed, int index) {
  auto rng = derived_rng(seed, 0, index);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 50), coord(-20, 20), free_var(-9, 9);
  B3Sample out;
  for (;;) {
    int pn = num(rng), pd = den(rng), a = coord(rng), b = coord(rng);
    Rational p = Rational(pn) / pd;
    if (a == 0) {  // x = a z vanishes
      ++out.resampled;
      continue;
    }
    auto z = null_conic_point(p);
    GaussianRational mu(Rational(b) / a);
    // U z = mu z in the unknowns u11, u12, u13, u22, u23, u33.
    Matrix<GaussianRational> sys(3, std::vector<GaussianRational>(7));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) sys[i][matrix_variable_index(3, i, j)] += z[j];
      sys[i][6] = mu * z[i];
    }
    auto ef = row_reduce(sys, 6);
    std::vector<GaussianRational> x(6);
    std::vector<bool> pivot(6, false);
    for (int c : ef.pivots) pivot[c] = true;
    for (int c = 0; c < 6; ++c)
      if (!pivot[c]) x[c] = GaussianRational(free_var(rng));
    for (size_t r = 0; r < ef.pivots.size(); ++r) {
      GaussianRational v = ef.rows[r][6];
      for (int c = 0; c < 6; ++c)
        if (!pivot[c]) v -= ef.rows[r][c] * x[c];
      x[ef.pivots[r]] = v;
    }
    out.zero = f.evaluate(x).is_zero();
    return out;
  }
}

inline B3MembershipReport verify_b3_membership(int samples, std::uint64_t seed, int workers = 1) {
  require(samples >= 1, "need at least one sample");
  auto f = b3_data().invariant.poly;
  std::vector<B3Sample> on(samples);
  std::vector<char> off(samples);
  parallel_for(samples, workers, [&](int i) {
    on[i] = b3_on_variety_sample(f, seed, i);
    auto rng = derived_rng(seed, 1, i);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::vector<BigInt> u(6);
    for (auto& x : u) x = entry(rng);
    off[i] = f.evaluate(u) != 0;
  });
  B3MembershipReport r;
  r.samples = r.off_samples = samples;
  for (int i = 0; i < samples; ++i) {
    (on[i].zero ? r.zeros : r.failures) += 1;
    r.resampled += on[i].resampled;
    r.off_nonzero += off[i];
  }
  return r;
}

// Action on symmetric matrices: congruence U -> A^T U A, or the fractional
// map U -> (cI + dU)(aI + bU)^-1.
struct MatrixAction {
  enum class Kind { Congruence, Fractional };
  std::string name;
  Kind kind = Kind::Congruence;
  Matrix<Rational> a_matrix;
  Rational a = 1, b = 0, c = 0, d = 1;

  static MatrixAction congruence(std::string name, Matrix<Rational> m) {
    MatrixAction g;
    g.name = std::move(name);
    g.a_matrix = std::move(m);
    return g;
  }
  static MatrixAction fractional(std::string name, Rational a, Rational b, Rational c, Rational d) {
    require(a * d - b * c == 1, "fractional action must be unimodular");
    MatrixAction g;
    g.name = std::move(name);
    g.kind = Kind::Fractional;
    g.a = a, g.b = b, g.c = c, g.d = d;
    return g;
  }

  Rational denominator_det(const Matrix<Rational>& u) const {
    if (kind == Kind::Congruence) return 1;
    return determinant(affine(u, a, b));
  }

  std::optional<Matrix<Rational>> apply(const Matrix<Rational>& u) const {
    const size_t n = u.size();
    if (kind == Kind::Congruence) {
      require(a_matrix.size() == n, "congruence matrix has the wrong size");
      Matrix<Rational> out(n, std::vector<Rational>(n, 0));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          for (size_t k = 0; k < n; ++k)
            for (size_t l = 0; l < n; ++l) out[i][j] += a_matrix[k][i] * u[k][l] * a_matrix[l][j];
      return out;
    }
    Matrix<Rational> aug = affine(u, a, b);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
    auto ef = row_reduce(aug, static_cast<int>(n));
    if (ef.pivots.size() != n) return std::nullopt;
    Matrix<Rational> num = affine(u, c, d), out(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) out[i][j] += num[i][k] * ef.rows[k][n + j];
    return out;
  }

 private:
  static Matrix<Rational> affine(const Matrix<Rational>& u, const Rational& s, const Rational& t) {
    Matrix<Rational> m = u;
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < u.size(); ++j) m[i][j] = t * u[i][j] + (i == j ? s : Rational(0));
    return m;
  }
};

struct InvarianceResult {
  std::string action;
  bool consistent = false;
  std::optional<int> k;
  std::optional<Rational> multiplier;
  int checked = 0;
};

inline Rational evaluate_on(const IntPolynomial& p, const Matrix<Rational>& u) {
  std::vector<Rational> pt;
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i; j < u.size(); ++j) pt.push_back(u[i][j]);
  return p.evaluate(pt);
}

inline Rational rational_pow(const Rational& x, int k) {
  Rational r = 1, b = k < 0 ? Rational(1) / x : x;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}

// Fits P(gU) det(aI + bU)^k = c P(U) on two samples and checks the rest.
inline std::vector<InvarianceResult> verify_invariance(const MinorPolynomial& p,
                                                       const std::vector<MatrixAction>& actions, int samples,
                                                       std::uint64_t seed) {
  require(samples >= 3, "invariance check needs at least three samples");
  std::vector<InvarianceResult> out;
  for (size_t g = 0; g < actions.size(); ++g) {
    const auto& act = actions[g];
    struct Row {
      Rational before, after, den;
    };
    std::vector<Row> rows;
    for (int i = 0; static_cast<int>(rows.size()) < samples; ++i) {
      require(i < 100 * samples, "could not draw admissible samples");
      auto rng = derived_rng(seed, 2 + g, i);
      std::uniform_int_distribution<int> entry(-5, 5);
      Matrix<Rational> u(p.n, std::vector<Rational>(p.n));
      for (int a = 0; a < p.n; ++a)
        for (int b = a; b < p.n; ++b) u[a][b] = u[b][a] = entry(rng);
      Rational before = evaluate_on(p.poly, u), den = act.denominator_det(u);
      if (before == 0 || den == 0) continue;
      auto image = act.apply(u);
      if (!image) continue;
      rows.push_back({before, evaluate_on(p.poly, *image), den});
    }
    InvarianceResult res{act.name};
    for (int k = 0; k <= 12 && !res.k; ++k)
      for (int sk : {k, -k}) {
        Rational c0 = rows[0].after * rational_pow(rows[0].den, sk) / rows[0].before;
        Rational c1 = rows[1].after * rational_pow(rows[1].den, sk) / rows[1].before;
        if (c0 == c1) {
          res.k = sk;
          res.multiplier = c0;
          break;
        }
      }
    if (res.k) {
      res.consistent = true;
      for (size_t i = 2; i < rows.size(); ++i) {
        ++res.checked;
        if (rows[i].after * rational_pow(rows[i].den, *res.k) != *res.multiplier * rows[i].before)
          res.consistent = false;
      }
    }
    out.push_back(res);
  }
  return out;
}

// Vector of C^2 (x) C^n as a 2 x n array of coordinates.
template <class S>
using TwoByN = std::array<std::vector<S>, 2>;

template <class S>
S epsilon(const S& x0, const S& x1, const S& y0, const S& y1) {
  return x0 * y1 - x1 * y0;
}

// Unsymmetrised quartic, multilinear in its four arguments.
template <class S>
S evaluate_q_raw(const TwoByN<S>& v1, const TwoByN<S>& v2, const TwoByN<S>& v3, const TwoByN<S>& v4) {
  const size_t n = v1[0].size();
  for (auto* v : {&v1, &v2, &v3, &v4})
    require((*v)[0].size() == n && (*v)[1].size() == n, "vectors of different dimensions");
  auto e = [&](const TwoByN<S>& a, const TwoByN<S>& b, size_t j, size_t k) {
    return epsilon(a[0][j], a[1][j], b[0][k], b[1][k]);
  };
  S acc(0);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      S left = e(v1, v2, j, k);
      if (is_zero(left)) continue;
      acc += left * (e(v3, v4, j, k) - e(v3, v4, k, j));
    }
  return acc;
}

template <class S>
S evaluate_q(const TwoByN<S>& v1, const TwoByN<S>& v2, const TwoByN<S>& v3, const TwoByN<S>& v4) {
  std::array<const TwoByN<S>*, 4> v{&v1, &v2, &v3, &v4};
  std::array<int, 4> p{0, 1, 2, 3};
  S acc(0);
  do acc += evaluate_q_raw(*v[p[0]], *v[p[1]], *v[p[2]], *v[p[3]]);
  while (std::next_permutation(p.begin(), p.end()));
  return acc / S(24);
}

template <class S>
struct SymplecticFrame {
  std::vector<TwoByN<S>> vectors;

  // xi_k (x) e_k with e_k the standard basis.
  static SymplecticFrame diagonal(const std::vector<std::array<S, 2>>& xi) {
    const size_t n = xi.size();
    SymplecticFrame f;
    for (size_t k = 0; k < n; ++k) {
      TwoByN<S> v{std::vector<S>(n, S(0)), std::vector<S>(n, S(0))};
      v[0][k] = xi[k][0];
      v[1][k] = xi[k][1];
      f.vectors.push_back(v);
    }
    return f;
  }

  int n() const { return static_cast<int>(vectors.size()); }

  bool is_lagrangian() const {
    for (auto& v : vectors)
      if (static_cast<int>(v[0].size()) != n()) return false;
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b) {
        S w(0);
        for (int j = 0; j < n(); ++j) w += epsilon(vectors[a][0][j], vectors[a][1][j], vectors[b][0][j], vectors[b][1][j]);
        if (!is_zero(w)) return false;
      }
    return true;
  }
};

inline int sign_of_permutation(const std::vector<int>& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

inline int cycle_count(const std::vector<int>& p) {
  int c = 0;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

inline constexpr int kQnGeneralMaxN = 5;

// q^n on the wedge of a Lagrangian frame: a sum over triples of permutations.
template <class S>
S evaluate_qn(const SymplecticFrame<S>& frame) {
  const int n = frame.n();
  require(n >= 1 && n <= kQnGeneralMaxN, "general q^n evaluation is limited to n <= 5");
  require(frame.is_lagrangian(), "frame is not Lagrangian");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto& v = frame.vectors;
  // Cache q over index quadruples.
  std::vector<S> cache(n * n * n * n);
  std::vector<bool> have(cache.size(), false);
  auto q = [&](int a, int b, int c, int d) -> const S& {
    size_t key = ((a * n + b) * n + c) * n + d;
    if (!have[key]) {
      cache[key] = evaluate_q_raw(v[a], v[b], v[c], v[d]);
      have[key] = true;
    }
    return cache[key];
  };
  S acc(0);
  for (auto& s1 : perms)
    for (auto& s2 : perms)
      for (auto& s3 : perms) {
        S t(sign_of_permutation(s1) * sign_of_permutation(s2) * sign_of_permutation(s3));
        for (int i = 0; i < n && !is_zero(t); ++i) t *= q(i, s1[i], s2[i], s3[i]);
        acc += t;
      }
  return acc;
}

// Diagonal frames: sum_sigma prod_i eps(xi_i, xi_sigma(i))^2 2^cycles(sigma),
// 2^cycles counting the sigma-invariant subsets. The triple sum carries no
// overall sign: each factor contributes +eps^2 and the signs of the three
// permutations multiply to sgn(sigma)^2.
template <class S>
S evaluate_qn_diagonal(const std::vector<std::array<S, 2>>& xi) {
  const int n = static_cast<int>(xi.size());
  require(n >= 1 && n <= 10, "diagonal q^n evaluation is limited to n <= 10");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  S acc(0);
  do {
    S t(1L << cycle_count(p));
    for (int i = 0; i < n && !is_zero(t); ++i) {
      S e = epsilon(xi[i][0], xi[i][1], xi[p[i]][0], xi[p[i]][1]);
      t *= e * e;
    }
    acc += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

struct SubadjointDegree {
  BigInt value;
  std::string formula;
};

inline SubadjointDegree subadjoint_degree(CartanType t) {
  require(t.family != Family::C, "type C has no subadjoint variety");
  auto f = [](long k) { return Rational(factorial(k)); };
  auto exact = [](const Rational& r) {
    ensure(is_integral(r), "subadjoint degree formula is not integral");
    return numerator(r);
  };
  switch (t.family) {
    case Family::A: return {2, "1 + 1"};
    case Family::B:
    case Family::D: {
      int n = ContactGrading(t).n();
      return {2 * (n - 1), "2(n-1), n = " + std::to_string(n)};
    }
    case Family::E:
      if (t.rank == 6) return {exact(f(9) / (Rational(4) * 27 * 16 * 5)), "9!/(2^2 3^3 4^2 5)"};
      if (t.rank == 7) return {exact(f(15) * f(2) * f(4) / (f(5) * f(7) * f(9))), "15! 2! 4!/(5! 7! 9!)"};
      return {13188, "13188"};
    case Family::F: return {exact(Rational(8) * f(6) * f(2) / (f(3) * f(5))), "2^3 6! 2!/(3! 5!)"};
    case Family::G: return {3, "twisted cubic"};
    default: break;
  }
  throw PreconditionError("unsupported type");
}

}  // namespace adjoint
