#pragma once

#include "adjoint/contact.hpp"

#include <map>
#include <set>
#include <vector>

namespace adjoint {

struct ParabolicCoset {
  WeylElement word;
  int length = 0;
  Weight weight;             // w.0, ambient fundamental coordinates
  Weight restricted_weight;  // w.0 restricted to the Levi factors
  Weight rho_image;          // w(rho), the coset key
};

// Minimal coset representatives graded by length. Index i holds W^p_i.
// The set is closed under dropping the last letter of a reduced word, so it
// is generated upward by right multiplication: w s_j is kept when its length
// grows by one and w s_j rho stays regular dominant on the Levi nodes.
inline std::vector<std::vector<ParabolicCoset>> generate_wp(const ContactGrading& g, int max_length = -1) {
  const RootSystem& rs = g.root_system();
  const int l = rs.rank();
  auto coset_of = [&](const Weight& rho_image) {
    ParabolicCoset c;
    c.word = WeylElement::from_rho_image(rs, rho_image);
    c.length = c.word.length();
    c.rho_image = rho_image;
    c.weight = c.rho_image;
    for (int& x : c.weight) --x;
    c.restricted_weight = g.restrict(c.weight);
    for (int v : g.delta0()) ensure(c.weight[v] >= 0, "coset weight is not g0-dominant");
    return c;
  };
  std::vector<std::vector<ParabolicCoset>> levels;
  levels.push_back({coset_of(rs.rho())});
  while (max_length < 0 || static_cast<int>(levels.size()) <= max_length) {
    std::set<Weight> next;
    const int len = static_cast<int>(levels.size());
    for (const auto& c : levels.back())
      for (int j = 0; j < l; ++j) {
        Weight step = c.word.apply(rs, rs.root_weight(rs.index_of(unit_root(l, j))));
        Weight u = c.rho_image;
        for (int k = 0; k < l; ++k) u[k] -= step[k];
        bool dominant = true;
        for (int v : g.delta0())
          if (u[v] <= 0) dominant = false;
        if (dominant && rs.length_of_rho_image(u) == len) next.insert(u);
      }
    if (next.empty()) break;
    std::vector<ParabolicCoset> level;
    for (auto& u : next) level.push_back(coset_of(u));
    std::sort(level.begin(), level.end(),
              [](const ParabolicCoset& a, const ParabolicCoset& b) { return a.word.word() < b.word.word(); });
    levels.push_back(std::move(level));
  }
  return levels;
}

inline std::vector<std::vector<ParabolicCoset>> generate_wp(CartanType t, int max_length = -1) {
  return generate_wp(ContactGrading(t), max_length);
}

// Summands of the i-th Lagrangian Plücker space as g_0-modules.
inline std::vector<ParabolicCoset> kostant_decomposition(const ContactGrading& g, int i) {
  require(i >= 1 && i <= g.n(), "degree out of range 1..n");
  auto levels = generate_wp(g, i);
  ensure(static_cast<int>(levels.size()) > i, "W^p has no element of the requested length");
  return levels[i];
}

inline std::vector<ParabolicCoset> kostant_decomposition(CartanType t, int i) {
  return kostant_decomposition(ContactGrading(t), i);
}

// Sum of Levi dimensions of the Kostant summands in degree i.
inline BigInt kostant_dimension(const ContactGrading& g, const std::vector<ParabolicCoset>& summands) {
  BigInt s = 0;
  for (auto& c : summands) s += g.levi().weyl_dim(c.restricted_weight);
  return s;
}

inline BigInt lagrangian_pluecker_dimension(int n, int i) { return binomial(2 * n, i) - binomial(2 * n, i - 2); }

}  // namespace adjoint
