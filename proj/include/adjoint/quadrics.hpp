#pragma once

#include "adjoint/kostant.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace adjoint {

// Symbols of the Grothendieck ring of Sp(2n) used by the quadric algorithm.
//   SymSq(i)    = [S^2 V_{l_i}]
//   Tensor(i,j) = [V_{l_i} (x) V_{l_j}]
//   D(i)        = [V_{2 l_i}]
//   P(i,j)      = [V_{l_i + l_j}], i < j; P(0,j) = [V_{l_j}]
struct KSymbol {
  enum class Kind { SymSq, Tensor, D, P };
  Kind kind;
  int i = 0, j = 0;

  friend auto operator<=>(const KSymbol&, const KSymbol&) = default;

  std::string str() const {
    switch (kind) {
      case Kind::SymSq: return "S2V(" + std::to_string(i) + ")";
      case Kind::Tensor: return "V(" + std::to_string(i) + ")xV(" + std::to_string(j) + ")";
      case Kind::D: return "D(" + std::to_string(i) + ")";
      case Kind::P: return "P(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return "?";
  }

  // Highest weight as a C_n weight (index 0 means the zero weight).
  Weight highest_weight(int n) const {
    Weight w(n, 0);
    if (kind == Kind::D) {
      if (i) w[i - 1] += 2;
    } else if (kind == Kind::P) {
      if (i) w[i - 1] += 1;
      if (j) w[j - 1] += 1;
    } else {
      throw PreconditionError("only D and P symbols are irreducible");
    }
    return w;
  }
};

struct KRelation {
  KSymbol lhs;
  std::vector<KSymbol> rhs;
};

inline KRelation sym_square_relation(int n, int i) {
  require(n >= 1 && n % 2 == 0, "symmetric-square relations need n even");
  require(i >= 1 && i <= n, "index out of range 1..n");
  KRelation r{{KSymbol::Kind::SymSq, i, 0}, {}};
  for (int j = 0; 2 * j <= i; ++j) r.rhs.push_back({KSymbol::Kind::D, i - 2 * j, 0});
  // (i-n)/2 <= j < k <= i/2, j+k >= 0, k-j <= n-i
  for (int k = -n; 2 * k <= i; ++k)
    for (int j = -n; j < k; ++j) {
      if (2 * j < i - n || j + k < 0 || k - j > n - i) continue;
      r.rhs.push_back({KSymbol::Kind::P, i - 2 * k, i - 2 * j});
    }
  std::sort(r.rhs.begin(), r.rhs.end());
  return r;
}

inline KRelation tensor_relation(int n, int i, int j) {
  require(i >= 1 && i < j && j <= n, "tensor relations need 1 <= i < j <= n");
  require((j - i) % 2 == 0, "tensor relations need j - i even");
  KRelation r{{KSymbol::Kind::Tensor, i, j}, {}};
  for (int k = 0; j + k <= n; ++k)
    for (int l = 0; k + l <= i; ++l) r.rhs.push_back({KSymbol::Kind::P, i - k - l, j + k - l});
  std::sort(r.rhs.begin(), r.rhs.end());
  return r;
}

// Both sides of a relation as dimensions of Sp(2n) modules.
inline std::pair<BigInt, BigInt> relation_dimensions(const RootSystem& sp, const KRelation& r) {
  const int n = sp.rank();
  auto fundamental = [&](int i) {
    Weight w(n, 0);
    if (i) w[i - 1] = 1;
    return sp.weyl_dim(w);
  };
  BigInt lhs;
  if (r.lhs.kind == KSymbol::Kind::SymSq) {
    BigInt d = fundamental(r.lhs.i);
    lhs = d * (d + 1) / 2;
  } else {
    lhs = fundamental(r.lhs.i) * fundamental(r.lhs.j);
  }
  BigInt rhs = 0;
  for (auto& s : r.rhs) rhs += sp.weyl_dim(s.highest_weight(n));
  return {lhs, rhs};
}

struct InvariantCounts {
  std::map<int, BigInt> sym_sq;
  std::map<std::pair<int, int>, BigInt> tensor;
  std::map<int, BigInt> trivial;  // invariants in V_{l_i}
  std::map<int, BigInt> d;
  std::map<std::pair<int, int>, BigInt> d_pair;
};

// Invariant counts of S^2 and tensor products of Plücker summands, read off
// from the Kostant decomposition and the database entry.
inline InvariantCounts count_invariant_pairs(const ContactGrading& g) {
  DatabaseEntry db = database_entry(g);
  const int n = g.n();
  auto levels = generate_wp(g, n);
  auto restricted = [&](const ParabolicCoset& c) {
    Weight w = c.weight;
    w[db.a_node] = 0;
    return w;
  };
  auto dual = [&](const Weight& w) {
    Weight v(w.size(), 0);
    for (size_t k = 0; k < w.size(); ++k) v[db.minus_w_circ[k]] = w[k];
    return v;
  };
  auto level = [&](int i) -> std::vector<Weight> {
    std::vector<Weight> out;
    if (i < static_cast<int>(levels.size()))
      for (auto& c : levels[i]) out.push_back(restricted(c));
    return out;
  };
  auto dual_pairs = [&](const std::vector<Weight>& a, const std::vector<Weight>& b) {
    BigInt cnt = 0;
    for (auto& x : a) {
      Weight dx = dual(x);
      for (auto& y : b)
        if (dx == y) ++cnt;
    }
    return cnt;
  };

  InvariantCounts out;
  for (int i = 1; i <= n; ++i) {
    auto li = level(i);
    BigInt sym = 0, alt = 0, zero = 0;
    for (auto& x : li) {
      if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; })) ++zero;
      if (dual(x) != x) continue;
      long par = 0;
      for (size_t k = 0; k < x.size(); ++k) par += static_cast<long>(x[k]) * db.h_circ[k];
      (par % 2 == 0 ? sym : alt) += 1;
    }
    BigInt twice = dual_pairs(li, li) + sym - alt;
    ensure(twice % 2 == 0, "odd intermediate in the symmetric-square halving");
    out.sym_sq[i] = twice / 2;
    out.trivial[i] = zero;
    for (int j = i + 2; j <= n; j += 2) out.tensor[{i, j}] = dual_pairs(li, level(j));
  }
  out.trivial[0] = 1;
  return out;
}

inline InvariantCounts count_invariant_pairs(CartanType t) { return count_invariant_pairs(ContactGrading(t)); }

// Solves the relation system for the invariant dimensions of V_{2 l_i} and
// V_{l_i + l_j}, filling d and d_pair.
inline void solve_relations(int n, InvariantCounts& c) {
  std::map<KSymbol, int> unknown;
  for (int i = 1; i <= n; ++i) unknown[{KSymbol::Kind::D, i, 0}] = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; j += 2) unknown[{KSymbol::Kind::P, i, j}] = 0;
  int idx = 0;
  for (auto& [s, k] : unknown) k = idx++;

  std::vector<KRelation> rels;
  std::vector<BigInt> values;
  for (int i = 1; i <= n; ++i) {
    rels.push_back(sym_square_relation(n, i));
    values.push_back(c.sym_sq.at(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; j += 2) {
      rels.push_back(tensor_relation(n, i, j));
      values.push_back(c.tensor.at({i, j}));
    }
  ensure(rels.size() == unknown.size(), "relation system is not square");

  Matrix<Rational> A(rels.size(), std::vector<Rational>(unknown.size(), 0));
  std::vector<Rational> b(rels.size());
  for (size_t e = 0; e < rels.size(); ++e) {
    b[e] = Rational(values[e]);
    for (auto& s : rels[e].rhs) {
      if (s.kind == KSymbol::Kind::D && s.i == 0) {
        b[e] -= 1;
      } else if (s.kind == KSymbol::Kind::P && s.i == 0) {
        b[e] -= Rational(c.trivial.at(s.j));
      } else {
        auto it = unknown.find(s);
        ensure(it != unknown.end(), "relation refers to an unknown outside the system: " + s.str());
        A[e][it->second] += 1;
      }
    }
  }
  auto x = solve_unique(A, b);
  for (auto& [s, k] : unknown) {
    ensure(is_integral(x[k]) && x[k] >= 0, "relation system has a non-integral or negative solution");
    if (s.kind == KSymbol::Kind::D) c.d[s.i] = numerator(x[k]);
    else c.d_pair[{s.i, s.j}] = numerator(x[k]);
  }
}

inline InvariantCounts solve_quadric_system(const ContactGrading& g) {
  require(g.type().family != Family::A && g.type().family != Family::C,
          "the quadric algorithm does not apply to types A and C");
  require(g.n() % 2 == 0, "n is odd: no quadric invariant by parity");
  auto c = count_invariant_pairs(g);
  solve_relations(g.n(), c);
  return c;
}

// dim R_2, the invariants in V_{2 l_n}.
inline BigInt quadric_invariant_dimension(const ContactGrading& g) { return solve_quadric_system(g).d.at(g.n()); }

inline BigInt quadric_invariant_dimension(CartanType t) { return quadric_invariant_dimension(ContactGrading(t)); }

}  // namespace adjoint
