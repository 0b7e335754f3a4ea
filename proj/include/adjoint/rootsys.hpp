#pragma once

#include "adjoint/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace adjoint {

// Weights live in the fundamental-weight basis, roots in the simple-root basis.
using Vec = std::vector<int>;
using Weight = Vec;
using RootVec = Vec;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  static bool valid(Family f, int r) {
    switch (f) {
      case Family::A: return r >= 1;
      case Family::B: return r >= 2;
      case Family::C: return r >= 2;
      case Family::D: return r >= 3;
      case Family::E: return r >= 6 && r <= 8;
      case Family::F: return r == 4;
      case Family::G: return r == 2;
    }
    return false;
  }

  static CartanType make(Family f, int r) {
    require(valid(f, r), std::string("invalid rank ") + std::to_string(r) + " for family " + char(f));
    return {f, r};
  }

  static CartanType parse(const std::string& s) {
    require(s.size() >= 2, "cannot parse Cartan type '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    require(std::string("ABCDEFG").find(f) != std::string::npos, "unknown family in '" + s + "'");
    int r = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      require(std::isdigit(static_cast<unsigned char>(s[i])), "bad rank in '" + s + "'");
      r = r * 10 + (s[i] - '0');
      require(r < 1000, "rank too large in '" + s + "'");
    }
    return make(static_cast<Family>(f), r);
  }

  std::string name() const { return std::string(1, char(family)) + std::to_string(rank); }

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

// cartan[i][j] = <alpha_i, alpha_j^vee>, Bourbaki labelling.
inline Matrix<int> bourbaki_cartan(CartanType t) {
  const int l = t.rank;
  Matrix<int> c(l, Vec(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      c[l - 2][l - 1] = -2;  // last node short
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      c[l - 1][l - 2] = -2;  // last node long
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      break;
    case Family::G:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

class WeylElement;

inline RootVec unit_root(int rank, int i) {
  RootVec e(rank, 0);
  e[i] = 1;
  return e;
}

class RootSystem {
 public:
  RootSystem() = default;

  explicit RootSystem(Matrix<int> cartan, std::optional<CartanType> type = std::nullopt)
      : cartan_(std::move(cartan)), type_(type) {
    rank_ = static_cast<int>(cartan_.size());
    for (auto& row : cartan_) require(static_cast<int>(row.size()) == rank_, "Cartan matrix not square");
    for (int i = 0; i < rank_; ++i) require(cartan_[i][i] == 2, "Cartan diagonal must be 2");
    build_symmetrizer();
    build_positive_roots();
  }

  static RootSystem of_type(CartanType t) { return RootSystem(bourbaki_cartan(t), t); }

  int rank() const { return rank_; }
  const Matrix<int>& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::optional<CartanType>& type() const { return type_; }
  const Vec& symmetrizer() const { return d_; }
  // Symmetrized pairing, equal to 2(alpha_i, alpha_j) with short roots of squared length 2.
  int pairing(int i, int j) const { return cartan_[i][j] * d_[j]; }

  const std::vector<RootVec>& positive_roots() const { return pos_; }
  int num_positive_roots() const { return static_cast<int>(pos_.size()); }
  int height(int a) const { return height_[a]; }
  // Root in fundamental-weight coordinates.
  const Weight& root_weight(int a) const { return root_weight_[a]; }
  // Coroot of a positive root in simple-coroot coordinates.
  const Vec& coroot(int a) const { return coroot_[a]; }
  // (alpha, alpha) in units where short simple roots have 1.
  int root_norm(int a) const { return norm_[a]; }

  int index_of(const RootVec& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
  }

  Weight rho() const { return Weight(rank_, 1); }

  // Length of w read off from w(rho): the number of positive coroots it pairs negatively with.
  int length_of_rho_image(const Weight& v) const {
    int n = 0;
    for (int a = 0; a < num_positive_roots(); ++a) n += coroot_pairing(v, a) < 0;
    return n;
  }

  Weight to_weight(const RootVec& c) const {
    Weight w(rank_, 0);
    for (int k = 0; k < rank_; ++k)
      if (c[k])
        for (int j = 0; j < rank_; ++j) w[j] += c[k] * cartan_[k][j];
    return w;
  }

  // <lambda, alpha^vee> for a positive root index.
  long coroot_pairing(const Weight& lambda, int a) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long>(coroot_[a][i]) * lambda[i];
    return s;
  }

  // Twice the inner product of lambda with the root whose simple coordinates are c.
  long scaled_product(const Weight& lambda, const RootVec& c) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long>(c[i]) * d_[i] * lambda[i];
    return s;
  }

  // Connected components of the Dynkin diagram, each sorted, ordered by smallest node.
  const std::vector<std::vector<int>>& components() const { return components_; }

  // Highest root of each irreducible component, in simple-root coordinates.
  std::vector<RootVec> highest_roots() const {
    std::vector<RootVec> out;
    for (auto& comp : components_) {
      int best = -1;
      for (int a = 0; a < num_positive_roots(); ++a) {
        bool inside = true;
        for (int i = 0; i < rank_; ++i)
          if (pos_[a][i] && std::find(comp.begin(), comp.end(), i) == comp.end()) inside = false;
        if (inside && (best < 0 || height_[a] > height_[best])) best = a;
      }
      out.push_back(pos_[best]);
    }
    return out;
  }

  RootVec highest_root() const {
    require(components_.size() == 1, "highest root requires an irreducible root system");
    return highest_roots().front();
  }

  void reflect(Weight& w, int i) const {
    int c = w[i];
    if (!c) return;
    for (int j = 0; j < rank_; ++j) w[j] -= c * cartan_[i][j];
  }

  bool is_dominant(const Weight& w) const {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
  }

  // Dominant representative and the parity of the number of reflections used.
  std::pair<Weight, int> dominant_rep(Weight w) const {
    int parity = 0;
    for (;;) {
      int i = 0;
      while (i < rank_ && w[i] >= 0) ++i;
      if (i == rank_) return {w, parity};
      reflect(w, i);
      parity ^= 1;
    }
  }

  std::vector<Weight> weyl_orbit(const Weight& w) const {
    std::set<Weight> seen{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (auto& v : frontier)
        for (int i = 0; i < rank_; ++i) {
          if (!v[i]) continue;
          Weight u = v;
          reflect(u, i);
          if (seen.insert(u).second) next.push_back(std::move(u));
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  BigInt weyl_dim(const Weight& lambda) const {
    require(static_cast<int>(lambda.size()) == rank_, "weight has wrong rank");
    require(is_dominant(lambda), "weyl_dim needs a dominant weight");
    BigInt num = 1, den = 1;
    for (int a = 0; a < num_positive_roots(); ++a) {
      long top = 0, bottom = 0;
      for (int i = 0; i < rank_; ++i) {
        top += static_cast<long>(pos_[a][i]) * d_[i] * (lambda[i] + 1);
        bottom += static_cast<long>(pos_[a][i]) * d_[i];
      }
      num *= top;
      den *= bottom;
    }
    ensure(num % den == 0, "Weyl dimension not integral");
    return num / den;
  }

  // |W_J| for the parabolic subgroup on the node set J, via the height product.
  BigInt parabolic_order(const std::vector<bool>& in_j) const {
    Rational r = 1;
    for (int a = 0; a < num_positive_roots(); ++a) {
      bool inside = true;
      for (int i = 0; i < rank_; ++i)
        if (pos_[a][i] && !in_j[i]) inside = false;
      if (inside) r *= Rational(height_[a] + 1, height_[a]);
    }
    ensure(is_integral(r), "parabolic order not integral");
    return numerator(r);
  }

  BigInt weyl_group_order() const { return parabolic_order(std::vector<bool>(rank_, true)); }

  BigInt orbit_size(const Weight& dominant) const {
    std::vector<bool> j(rank_);
    for (int i = 0; i < rank_; ++i) j[i] = dominant[i] == 0;
    return weyl_group_order() / parabolic_order(j);
  }

  Vec sum_positive_coroots() const {
    Vec s(rank_, 0);
    for (auto& c : coroot_)
      for (int i = 0; i < rank_; ++i) s[i] += c[i];
    return s;
  }

  WeylElement longest_element() const;

  // Permutation sigma (0-based) with -w0(omega_i) = omega_sigma(i).
  std::vector<int> longest_involution() const;

 private:
  void build_symmetrizer() {
    d_.assign(rank_, 0);
    std::vector<Rational> q(rank_, 0);
    std::vector<bool> seen(rank_, false);
    for (int s = 0; s < rank_; ++s) {
      if (seen[s]) continue;
      std::vector<int> comp{s}, stack{s};
      seen[s] = true;
      q[s] = 1;
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < rank_; ++j) {
          if (j == i || cartan_[i][j] == 0) continue;
          require(cartan_[j][i] != 0, "Cartan matrix has asymmetric zero pattern");
          // cartan[i][j] d_j = cartan[j][i] d_i
          Rational qj = q[i] * cartan_[j][i] / cartan_[i][j];
          if (!seen[j]) {
            seen[j] = true;
            q[j] = qj;
            comp.push_back(j);
            stack.push_back(j);
          } else {
            require(q[j] == qj, "Cartan matrix is not symmetrizable");
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      BigInt l = 1;
      for (int i : comp) l = boost::multiprecision::lcm(l, denominator(q[i]));
      BigInt g = 0;
      for (int i : comp) g = boost::multiprecision::gcd(g, numerator(Rational(q[i] * l)));
      for (int i : comp) d_[i] = static_cast<int>(numerator(Rational(q[i] * l)) / g);
      components_.push_back(comp);
    }
    std::sort(components_.begin(), components_.end());
  }

  void build_positive_roots() {
    std::set<RootVec> seen;
    std::vector<RootVec> frontier;
    for (int i = 0; i < rank_; ++i) {
      RootVec e(rank_, 0);
      e[i] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<RootVec> next;
      for (auto& b : frontier)
        for (int i = 0; i < rank_; ++i) {
          int p = 0;
          for (int k = 0; k < rank_; ++k) p += b[k] * cartan_[k][i];
          if (p >= 0) continue;  // only going up
          RootVec c = b;
          c[i] -= p;
          ensure(c[i] < 100, "root closure diverges; not a finite-type Cartan matrix");
          if (seen.insert(c).second) next.push_back(std::move(c));
        }
      frontier = std::move(next);
    }
    pos_.assign(seen.begin(), seen.end());
    auto ht = [](const RootVec& r) { int h = 0; for (int x : r) h += x; return h; };
    std::stable_sort(pos_.begin(), pos_.end(), [&](const RootVec& a, const RootVec& b) {
      int ha = ht(a), hb = ht(b);
      return ha != hb ? ha < hb : a < b;
    });
    for (int a = 0; a < num_positive_roots(); ++a) {
      index_[pos_[a]] = a;
      height_.push_back(ht(pos_[a]));
      root_weight_.push_back(to_weight(pos_[a]));
      long nn = 0;
      for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) nn += static_cast<long>(pos_[a][i]) * pos_[a][j] * pairing(i, j);
      ensure(nn % 2 == 0, "odd root norm");
      norm_.push_back(static_cast<int>(nn / 2));
      Vec cr(rank_);
      for (int i = 0; i < rank_; ++i) {
        long x = static_cast<long>(pos_[a][i]) * d_[i];
        ensure(x % norm_.back() == 0, "coroot not integral");
        cr[i] = static_cast<int>(x / norm_.back());
      }
      coroot_.push_back(cr);
    }
  }

  int rank_ = 0;
  Matrix<int> cartan_;
  std::optional<CartanType> type_;
  Vec d_;
  std::vector<std::vector<int>> components_;
  std::vector<RootVec> pos_;
  std::map<RootVec, int> index_;
  std::vector<int> height_;
  std::vector<Weight> root_weight_;
  std::vector<int> norm_;
  std::vector<Vec> coroot_;
};

// A Weyl group element held as its lexicographically least reduced word.
// The word w = s_{word[0]} s_{word[1]} ... acts right to left.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    for (int i : word) require(i >= 0 && i < rs.rank(), "reflection index out of range");
    Weight v = rs.rho();
    for (auto it = word.rbegin(); it != word.rend(); ++it) rs.reflect(v, *it);
    return from_rho_image(rs, std::move(v));
  }

  // Recovers w from w(rho) by greedy descent.
  static WeylElement from_rho_image(const RootSystem& rs, Weight v) {
    WeylElement w;
    for (;;) {
      int j = 0;
      while (j < rs.rank() && v[j] > 0) ++j;
      if (j == rs.rank()) break;
      ensure(v[j] < 0, "weight is not a Weyl image of rho");
      rs.reflect(v, j);
      w.word_.push_back(j);
    }
    ensure(v == rs.rho(), "weight is not a Weyl image of rho");
    return w;
  }

  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  int sign() const { return length() % 2 ? -1 : 1; }

  Weight apply(const RootSystem& rs, Weight v) const {
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) rs.reflect(v, *it);
    return v;
  }

  // w . lambda = w(lambda + rho) - rho
  Weight dot(const RootSystem& rs, Weight lambda) const {
    for (int& x : lambda) ++x;
    lambda = apply(rs, std::move(lambda));
    for (int& x : lambda) --x;
    return lambda;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> word_;
};

inline Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  return w.dot(rs, lambda);
}

inline WeylElement RootSystem::longest_element() const {
  Weight v = rho();
  for (int& x : v) x = -x;
  auto w = WeylElement::from_rho_image(*this, v);
  ensure(w.length() == num_positive_roots(), "longest element length differs from |positive roots|");
  return w;
}

inline std::vector<int> RootSystem::longest_involution() const {
  auto w0 = longest_element();
  std::vector<int> sigma(rank_);
  for (int i = 0; i < rank_; ++i) {
    Weight om(rank_, 0);
    om[i] = 1;
    Weight im = w0.apply(*this, om);
    int found = -1;
    for (int j = 0; j < rank_; ++j) {
      Weight target(rank_, 0);
      target[j] = -1;
      if (im == target) found = j;
    }
    ensure(found >= 0, "-w0 does not permute fundamental weights");
    sigma[i] = found;
  }
  return sigma;
}

inline RootSystem build_root_system(CartanType t) { return RootSystem::of_type(t); }

// Block-diagonal Cartan matrix of a list of simple types, in the given order.
inline Matrix<int> block_cartan(const std::vector<CartanType>& parts) {
  int total = 0;
  for (auto& p : parts) total += p.rank;
  Matrix<int> m(total, Vec(total, 0));
  int off = 0;
  for (auto& p : parts) {
    auto c = bourbaki_cartan(p);
    for (int i = 0; i < p.rank; ++i)
      for (int j = 0; j < p.rank; ++j) m[off + i][off + j] = c[i][j];
    off += p.rank;
  }
  return m;
}

// The symplectic root system of rank n, including n = 1 where C1 = A1.
inline RootSystem symplectic_root_system(int n) {
  require(n >= 1, "symplectic rank must be positive");
  if (n == 1) return RootSystem(Matrix<int>{{2}});
  return RootSystem::of_type(CartanType::make(Family::C, n));
}

inline std::string format_weight(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace adjoint
