#pragma once

#include "adjoint/rootsys.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace adjoint {

// One simple factor of a Levi subalgebra: its type and the ambient nodes
// listed in the factor's own Bourbaki order.
struct LeviFactor {
  CartanType type;
  std::vector<int> nodes;
};

namespace detail {

inline bool match_labelling(const Matrix<int>& ambient, const std::vector<int>& comp,
                            const Matrix<int>& model, std::vector<int>& image, std::vector<bool>& used,
                            size_t k) {
  if (k == model.size()) return true;
  for (size_t c = 0; c < comp.size(); ++c) {
    if (used[c]) continue;
    int node = comp[c];
    bool ok = ambient[node][node] == model[k][k];
    for (size_t j = 0; j < k && ok; ++j)
      ok = ambient[node][image[j]] == model[k][j] && ambient[image[j]][node] == model[j][k];
    if (!ok) continue;
    used[c] = true;
    image[k] = node;
    if (match_labelling(ambient, comp, model, image, used, k + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace detail

// Identifies the simple type of a connected node set and a labelling of it
// into Bourbaki order. Ties are broken by family order, then by the
// lexicographically first labelling.
inline LeviFactor identify_factor(const Matrix<int>& ambient, const std::vector<int>& comp) {
  const int r = static_cast<int>(comp.size());
  for (char f : std::string("ABCDEFG")) {
    auto fam = static_cast<Family>(f);
    if (!CartanType::valid(fam, r)) continue;
    CartanType t{fam, r};
    auto model = bourbaki_cartan(t);
    std::vector<int> image(r);
    std::vector<bool> used(r, false);
    if (detail::match_labelling(ambient, comp, model, image, used, 0)) return {t, image};
  }
  throw ConsistencyError("unrecognised Dynkin subdiagram");
}

class ContactGrading {
 public:
  explicit ContactGrading(CartanType type) : type_(type), rs_(RootSystem::of_type(type)) {
    require(!(type.family == Family::A && type.rank == 1), "A1: no adjoint contact variety");
    const int l = rs_.rank();
    gamma_root_ = rs_.highest_root();
    gamma_ = rs_.to_weight(gamma_root_);
    int g = rs_.index_of(gamma_root_);
    grading_coroot_ = rs_.coroot(g);
    for (int i = 0; i < l; ++i) (gamma_[i] == 0 ? delta0_ : a_nodes_).push_back(i);

    for (int a = 0; a < rs_.num_positive_roots(); ++a) {
      int deg = root_degree(rs_.positive_roots()[a]);
      ensure(deg >= 0 && deg <= 2, "root degree out of range");
      if (deg == 0) continue;
      RootVec neg = rs_.positive_roots()[a];
      for (int& x : neg) x = -x;
      by_degree_[deg].push_back(rs_.positive_roots()[a]);
      by_degree_[-deg].push_back(neg);
    }
    for (auto& [k, v] : by_degree_) std::sort(v.begin(), v.end());
    ensure(by_degree_[2].size() == 1 && by_degree_[-2].size() == 1, "g_2 is not one-dimensional");
    ensure(by_degree_[-1].size() % 2 == 0, "g_-1 has odd dimension");
    n_ = static_cast<int>(by_degree_[-1].size() / 2);

    // Levi factors on the nodes orthogonal to gamma, in Bourbaki order.
    std::vector<bool> seen(l, false);
    for (int s : delta0_) {
      if (seen[s]) continue;
      std::vector<int> comp, stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        comp.push_back(i);
        for (int j : delta0_)
          if (!seen[j] && rs_.cartan(i, j) != 0) {
            seen[j] = true;
            stack.push_back(j);
          }
      }
      std::sort(comp.begin(), comp.end());
      factors_.push_back(identify_factor(rs_.cartan(), comp));
    }
    std::vector<CartanType> parts;
    for (auto& f : factors_) {
      parts.push_back(f.type);
      for (int v : f.nodes) levi_nodes_.push_back(v);
    }
    levi_ = RootSystem(block_cartan(parts));
    for (size_t i = 0; i < levi_nodes_.size(); ++i)
      for (size_t j = 0; j < levi_nodes_.size(); ++j)
        ensure(levi_.cartan(i, j) == rs_.cartan(levi_nodes_[i], levi_nodes_[j]),
               "Levi relabelling does not preserve the Cartan matrix");
  }

  const CartanType& type() const { return type_; }
  const RootSystem& root_system() const { return rs_; }
  const Weight& gamma() const { return gamma_; }
  const RootVec& gamma_root() const { return gamma_root_; }
  const Vec& grading_coroot() const { return grading_coroot_; }
  const std::vector<int>& delta0() const { return delta0_; }
  const std::vector<int>& a_nodes() const { return a_nodes_; }
  int torus_rank() const { return rs_.rank() - static_cast<int>(delta0_.size()); }
  int n() const { return n_; }
  const std::map<int, std::vector<RootVec>>& roots_by_degree() const { return by_degree_; }
  const std::vector<RootVec>& roots_of_degree(int k) const { return by_degree_.at(k); }

  // Semisimple part of g_0 with its factors in Bourbaki order.
  const RootSystem& levi() const { return levi_; }
  const std::vector<LeviFactor>& levi_factors() const { return factors_; }
  // levi_nodes()[k] is the ambient node carrying Levi label k.
  const std::vector<int>& levi_nodes() const { return levi_nodes_; }

  std::string levi_name() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (auto& f : factors_) s += (s.empty() ? "" : "+") + f.type.name();
    return s;
  }

  int root_degree(const RootVec& c) const {
    long s = 0;
    for (int i = 0; i < rs_.rank(); ++i) s += static_cast<long>(c[i]) * gamma_[i] * rs_.symmetrizer()[i];
    int dg = rs_.root_norm(rs_.index_of(gamma_root_));
    ensure(s % dg == 0, "non-integral root degree");
    return static_cast<int>(s / dg);
  }

  // Restriction of an ambient weight to the Levi factors.
  Weight restrict(const Weight& w) const {
    Weight r;
    r.reserve(levi_nodes_.size());
    for (int v : levi_nodes_) r.push_back(w[v]);
    return r;
  }

  // Restricted weights of g_-1, sorted.
  std::vector<Weight> g_minus1_weights() const {
    std::vector<Weight> out;
    for (auto& r : by_degree_.at(-1)) out.push_back(restrict(rs_.to_weight(r)));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Highest weights of the irreducible Levi summands of g_-1: -alpha_a restricted.
  std::vector<Weight> g_minus1_highest_weights() const {
    std::vector<Weight> out;
    for (int a : a_nodes_) {
      RootVec r(rs_.rank(), 0);
      r[a] = -1;
      out.push_back(restrict(rs_.to_weight(r)));
    }
    return out;
  }

 private:
  CartanType type_;
  RootSystem rs_;
  RootVec gamma_root_;
  Weight gamma_;
  Vec grading_coroot_;
  std::vector<int> delta0_, a_nodes_;
  std::map<int, std::vector<RootVec>> by_degree_;
  int n_ = 0;
  std::vector<LeviFactor> factors_;
  std::vector<int> levi_nodes_;
  RootSystem levi_;
};

inline ContactGrading contact_grading(CartanType t) { return ContactGrading(t); }

inline std::vector<Weight> g_minus1_highest_weights(const ContactGrading& g) {
  return g.g_minus1_highest_weights();
}

// Data consumed by the quadric invariant count, in ambient node labels.
struct DatabaseEntry {
  CartanType type;
  Matrix<int> cartan_matrix;
  Matrix<int> cartan_matrix_g0ss;
  int a_node = 0;                 // 0-based
  std::vector<int> minus_w_circ;  // 0-based permutation fixing a_node
  Vec h_circ;                     // zero at a_node
  int n = 0;
};

inline DatabaseEntry database_entry(const ContactGrading& g) {
  require(g.type().family != Family::A, "type A: rank-2 torus; bigraded case handled separately");
  require(g.type().family != Family::C, "type C: the symplectic group acts transitively on the PDE bundle");
  const int l = g.root_system().rank();
  DatabaseEntry e;
  e.type = g.type();
  e.cartan_matrix = g.root_system().cartan();
  e.cartan_matrix_g0ss = g.levi().cartan();
  ensure(g.a_nodes().size() == 1, "expected a single grading node");
  e.a_node = g.a_nodes().front();
  e.n = g.n();
  auto sigma = g.levi().longest_involution();
  auto h = g.levi().sum_positive_coroots();
  const auto& nodes = g.levi_nodes();
  e.minus_w_circ.resize(l);
  e.h_circ.assign(l, 0);
  e.minus_w_circ[e.a_node] = e.a_node;
  for (size_t k = 0; k < nodes.size(); ++k) {
    e.minus_w_circ[nodes[k]] = nodes[sigma[k]];
    e.h_circ[nodes[k]] = h[k];
  }
  return e;
}

inline DatabaseEntry database_entry(CartanType t) { return database_entry(ContactGrading(t)); }

// Characters of the rank-2 torus on the two summands of g_-1 in type A_{n+1}.
inline std::pair<std::array<int, 2>, std::array<int, 2>> type_A_torus_characters(int n) {
  require(n >= 1, "type A torus characters need n >= 1");
  return {{1, -1}, {-1, n + 1}};
}

}  // namespace adjoint
