#pragma once

#include "adjoint/kostant.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <vector>

namespace adjoint {

// Weight multiplicities of a representation, stored on dominant weights only.
struct FormalCharacter {
  int rank = 0;
  std::map<Weight, BigInt> entries;

  BigInt multiplicity(const RootSystem& rs, const Weight& w) const {
    auto it = entries.find(rs.dominant_rep(w).first);
    return it == entries.end() ? BigInt(0) : it->second;
  }

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
};

inline FormalCharacter trivial_character(int rank) {
  FormalCharacter c;
  c.rank = rank;
  c.entries[Weight(rank, 0)] = 1;
  return c;
}

inline BigInt total_dimension(const RootSystem& rs, const FormalCharacter& chi) {
  BigInt s = 0;
  for (auto& [w, m] : chi.entries) s += m * rs.orbit_size(w);
  return s;
}

// Freudenthal's recursion on the dominant weights of V(lambda). All inner
// products are doubled so that everything stays integral.
inline FormalCharacter freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  const int l = rs.rank();
  require(static_cast<int>(lambda.size()) == l, "weight has wrong rank");
  require(rs.is_dominant(lambda), "highest weight must be dominant");
  const auto& roots = rs.positive_roots();
  const int np = rs.num_positive_roots();

  std::map<Weight, RootVec> depth{{lambda, RootVec(l, 0)}};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (auto& mu : frontier)
      for (int a = 0; a < np; ++a) {
        Weight nu = mu;
        for (int j = 0; j < l; ++j) nu[j] -= rs.root_weight(a)[j];
        if (!rs.is_dominant(nu) || depth.count(nu)) continue;
        RootVec dv = depth[mu];
        for (int j = 0; j < l; ++j) dv[j] += roots[a][j];
        depth.emplace(nu, dv);
        next.push_back(std::move(nu));
      }
    frontier = std::move(next);
  }

  std::vector<std::pair<int, Weight>> order;
  for (auto& [mu, dv] : depth) {
    int h = 0;
    for (int x : dv) h += x;
    order.emplace_back(h, mu);
  }
  std::sort(order.begin(), order.end());

  FormalCharacter chi;
  chi.rank = l;
  for (auto& [h, mu] : order) {
    if (h == 0) {
      chi.entries[mu] = 1;
      continue;
    }
    const RootVec& dv = depth[mu];
    long lhs = 0;
    for (int j = 0; j < l; ++j) lhs += static_cast<long>(dv[j]) * rs.symmetrizer()[j] * (lambda[j] + mu[j] + 2);
    BigInt rhs = 0;
    for (int a = 0; a < np; ++a) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        for (int j = 0; j < l; ++j) nu[j] += rs.root_weight(a)[j];
        auto it = chi.entries.find(rs.dominant_rep(nu).first);
        if (it == chi.entries.end()) break;
        rhs += 2 * rs.scaled_product(nu, roots[a]) * it->second;
      }
    }
    ensure(lhs > 0 && rhs % lhs == 0, "Freudenthal recursion produced a non-integral multiplicity");
    BigInt m = rhs / lhs;
    if (m > 0) chi.entries[mu] = m;
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Character arithmetic used to decompose products and symmetric squares.

using ExpandedCharacter = std::map<Weight, BigInt>;

inline ExpandedCharacter expand(const RootSystem& rs, const FormalCharacter& chi) {
  ExpandedCharacter out;
  for (auto& [w, m] : chi.entries)
    for (auto& v : rs.weyl_orbit(w)) out[v] += m;
  return out;
}

inline FormalCharacter fold(const RootSystem& rs, const ExpandedCharacter& e) {
  FormalCharacter c;
  c.rank = rs.rank();
  for (auto& [w, m] : e)
    if (rs.is_dominant(w) && m != 0) c.entries[w] = m;
  return c;
}

inline FormalCharacter multiply(const RootSystem& rs, const FormalCharacter& a, const FormalCharacter& b) {
  auto ea = expand(rs, a), eb = expand(rs, b);
  ExpandedCharacter out;
  for (auto& [u, mu] : ea)
    for (auto& [v, mv] : eb) {
      Weight w = u;
      for (size_t i = 0; i < w.size(); ++i) w[i] += v[i];
      out[w] += mu * mv;
    }
  return fold(rs, out);
}

// Symmetric square via (chi^2 + psi^2 chi) / 2.
inline FormalCharacter symmetric_square(const RootSystem& rs, const FormalCharacter& a) {
  auto sq = multiply(rs, a, a);
  auto ea = expand(rs, a);
  FormalCharacter out;
  out.rank = rs.rank();
  for (auto& [w, m] : sq.entries) {
    Weight half = w;
    bool even = true;
    for (int& x : half) {
      if (x % 2) even = false;
      x /= 2;
    }
    BigInt adams = 0;
    if (even) {
      auto it = ea.find(half);
      if (it != ea.end()) adams = it->second;
    }
    ensure((m + adams) % 2 == 0, "symmetric square is not integral");
    BigInt v = (m + adams) / 2;
    if (v != 0) out.entries[w] = v;
  }
  return out;
}

// Multiplicities of irreducible summands, by repeatedly peeling off the
// highest remaining weight.
inline std::map<Weight, BigInt> decompose(const RootSystem& rs, FormalCharacter chi) {
  const Vec h = rs.sum_positive_coroots();
  auto level = [&](const Weight& w) {
    long s = 0;
    for (size_t i = 0; i < w.size(); ++i) s += static_cast<long>(w[i]) * h[i];
    return s;
  };
  std::map<Weight, BigInt> out;
  while (!chi.entries.empty()) {
    auto top = chi.entries.begin();
    for (auto it = chi.entries.begin(); it != chi.entries.end(); ++it)
      if (level(it->first) > level(top->first)) top = it;
    Weight hw = top->first;
    BigInt m = top->second;
    ensure(m > 0, "virtual character has a negative leading multiplicity");
    out[hw] = m;
    for (auto& [w, k] : freudenthal_character(rs, hw).entries) {
      BigInt& slot = chi.entries[w];
      slot -= m * k;
      if (slot == 0) chi.entries.erase(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Restriction along the embedding of the Levi factors into Sp(g_-1).

struct BranchingMatrix {
  enum class Provenance { derived, fixture };
  Matrix<int> matrix;  // rows: Levi rank, columns: 1..n
  Provenance provenance = Provenance::derived;
  std::vector<std::vector<int>> chosen_words;

  int rows() const { return static_cast<int>(matrix.size()); }
  int cols() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }
};

// The differences e_i = col_i - col_{i-1} and their negatives must be the
// restricted weights of g_-1 with multiplicity.
inline bool validate_branching_matrix(const ContactGrading& g, const Matrix<int>& m) {
  const int r = g.levi().rank(), n = g.n();
  if (static_cast<int>(m.size()) != r) return false;
  for (auto& row : m)
    if (static_cast<int>(row.size()) != n) return false;
  std::vector<Weight> got;
  for (int i = 0; i < n; ++i) {
    Weight e(r);
    for (int k = 0; k < r; ++k) e[k] = m[k][i] - (i ? m[k][i - 1] : 0);
    got.push_back(e);
    for (int& x : e) x = -x;
    got.push_back(e);
  }
  std::sort(got.begin(), got.end());
  return got == g.g_minus1_weights();
}

inline BranchingMatrix build_branching_matrix(const ContactGrading& g) {
  const int n = g.n(), r = g.levi().rank();
  auto levels = generate_wp(g, n);
  require(static_cast<int>(levels.size()) > n, "W^p is too short for the branching construction");
  std::map<Weight, int> pool;
  for (auto& w : g.g_minus1_weights()) ++pool[w];

  std::vector<int> choice(n + 1, -1);
  std::function<bool(int, const Weight&)> search = [&](int i, const Weight& prev) -> bool {
    if (i > n) return true;
    for (size_t c = 0; c < levels[i].size(); ++c) {
      const Weight& col = levels[i][c].restricted_weight;
      Weight e(r), neg(r);
      for (int k = 0; k < r; ++k) {
        e[k] = col[k] - prev[k];
        neg[k] = -e[k];
      }
      auto take = [&](const Weight& w) {
        auto it = pool.find(w);
        if (it == pool.end() || it->second == 0) return false;
        --it->second;
        return true;
      };
      if (!take(e)) continue;
      if (!take(neg)) {
        ++pool[e];
        continue;
      }
      choice[i] = static_cast<int>(c);
      if (search(i + 1, col)) return true;
      ++pool[e];
      ++pool[neg];
    }
    return false;
  };
  if (!search(1, Weight(r, 0)))
    throw PreconditionError("no choice of coset representatives passes the g_-1 weight validation for " +
                            g.type().name());

  BranchingMatrix b;
  b.matrix.assign(r, Vec(n, 0));
  for (int i = 1; i <= n; ++i) {
    const auto& cs = levels[i][choice[i]];
    for (int k = 0; k < r; ++k) b.matrix[k][i - 1] = cs.restricted_weight[k];
    b.chosen_words.push_back(cs.word.word());
  }
  ensure(validate_branching_matrix(g, b.matrix), "derived branching matrix fails validation");
  return b;
}

inline BranchingMatrix fixture_branching_matrix(const ContactGrading& g, Matrix<int> m) {
  if (!validate_branching_matrix(g, m))
    throw PreconditionError("supplied branching matrix fails the g_-1 weight validation");
  BranchingMatrix b;
  b.matrix = std::move(m);
  b.provenance = BranchingMatrix::Provenance::fixture;
  return b;
}

struct PushforwardOptions {
  int workers = 1;
  std::optional<std::set<Weight>> targets;  // keep only these dominant images
};

namespace detail {

constexpr int kMaxLeviRank = 8;
using Image = std::array<long long, kMaxLeviRank>;

struct ImageHash {
  size_t operator()(const Image& a) const {
    size_t h = 1469598103934665603ull;
    for (long long x : a) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

using Tally = std::unordered_map<Image, __int128, ImageHash>;

inline void merge_tally(std::map<Weight, BigInt>& out, const Tally& t, int rows) {
  for (auto& [img, cnt] : t) {
    if (cnt == 0) continue;
    Weight w(img.begin(), img.begin() + rows);
    // __int128 to BigInt through two 64-bit halves
    bool neg = cnt < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-cnt) : static_cast<unsigned __int128>(cnt);
    BigInt v = static_cast<unsigned long long>(u >> 64);
    v <<= 64;
    v += static_cast<unsigned long long>(u);
    out[w] += neg ? BigInt(-v) : v;
  }
}

}  // namespace detail

// Generic pushforward: expands every Weyl orbit and maps fundamental
// coordinates through the matrix. Slow, used as an oracle.
inline FormalCharacter pushforward_by_orbits(const RootSystem& source, const FormalCharacter& chi,
                                             const BranchingMatrix& b, const RootSystem& target) {
  const int r = target.rank();
  require(b.cols() == source.rank() || (r == 0), "branching matrix has the wrong number of columns");
  std::map<Weight, BigInt> acc;
  for (auto& [w, m] : chi.entries)
    for (auto& v : source.weyl_orbit(w)) {
      Weight img(r, 0);
      for (int k = 0; k < r; ++k)
        for (int i = 0; i < source.rank(); ++i) img[k] += b.matrix[k][i] * v[i];
      if (target.is_dominant(img)) acc[img] += m;
    }
  FormalCharacter out;
  out.rank = r;
  for (auto& [w, m] : acc)
    if (m != 0) out.entries[w] = m;
  return out;
}

// Pushforward of a character of Sp(2n). Orbits are enumerated as signed
// permutations of the epsilon coordinates x_k = sum_{i>=k} mu_i, and only
// dominant images are tallied.
inline FormalCharacter pushforward(const FormalCharacter& chi, const BranchingMatrix& b, const RootSystem& target,
                                   const PushforwardOptions& opt = {}) {
  const int n = chi.rank, r = target.rank();
  require(r <= detail::kMaxLeviRank, "Levi rank too large for the fast pushforward");
  require(r == 0 || b.cols() == n, "branching matrix has the wrong number of columns");
  require(r == b.rows(), "branching matrix has the wrong number of rows");

  // e_k images of the epsilon basis
  std::vector<detail::Image> eps(n);
  for (int k = 0; k < n; ++k) {
    eps[k].fill(0);
    for (int q = 0; q < r; ++q) eps[k][q] = b.matrix[q][k] - (k ? b.matrix[q][k - 1] : 0);
  }

  std::set<detail::Image> wanted;
  if (opt.targets)
    for (auto& t : *opt.targets) {
      detail::Image img{};
      std::copy(t.begin(), t.end(), img.begin());
      wanted.insert(img);
    }

  struct Task {
    std::vector<std::pair<int, int>> values;  // (absolute value, count), distinct
    long long mult;
    int first;  // index into values for position 0
    int sign;
  };
  std::vector<Task> tasks;
  for (auto& [w, m] : chi.entries) {
    ensure(m <= std::numeric_limits<long long>::max(), "multiplicity exceeds 64 bits");
    std::map<int, int> counts;
    int acc = 0;
    std::vector<int> x(n);
    for (int k = n - 1; k >= 0; --k) x[k] = (acc += w[k]);
    for (int v : x) ++counts[v];
    std::vector<std::pair<int, int>> values(counts.begin(), counts.end());
    long long mm = static_cast<long long>(m);
    if (n == 0) {
      tasks.push_back({values, mm, -1, 1});
      continue;
    }
    for (size_t f = 0; f < values.size(); ++f) {
      tasks.push_back({values, mm, static_cast<int>(f), 1});
      if (values[f].first != 0) tasks.push_back({values, mm, static_cast<int>(f), -1});
    }
  }

  auto run = [&](const Task& t, detail::Tally& tally) {
    auto values = t.values;
    detail::Image partial{};
    auto leaf = [&]() {
      for (int q = 0; q < r; ++q)
        if (partial[q] < 0) return;
      if (opt.targets && !wanted.count(partial)) return;
      tally[partial] += t.mult;
    };
    std::function<void(int)> rec = [&](int k) {
      if (k == n) {
        leaf();
        return;
      }
      for (auto& [v, c] : values) {
        if (!c) continue;
        --c;
        for (int s : {1, -1}) {
          if (s == -1 && v == 0) break;
          long long y = static_cast<long long>(s) * v;
          for (int q = 0; q < r; ++q) partial[q] += y * eps[k][q];
          rec(k + 1);
          for (int q = 0; q < r; ++q) partial[q] -= y * eps[k][q];
        }
        ++c;
      }
    };
    if (t.first < 0) {
      leaf();
      return;
    }
    auto& [v, c] = values[t.first];
    --c;
    long long y = static_cast<long long>(t.sign) * v;
    for (int q = 0; q < r; ++q) partial[q] += y * eps[0][q];
    rec(1);
  };

  std::vector<detail::Tally> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < tasks.size();) run(tasks[i], results[i]);
  };
  int nw = std::max(1, opt.workers);
  if (nw == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::map<Weight, BigInt> acc;
  for (auto& t : results) detail::merge_tally(acc, t, r);
  FormalCharacter out;
  out.rank = r;
  for (auto& [w, m] : acc)
    if (m != 0) out.entries[w] = m;
  return out;
}

// Weyl group of a root system as (w(rho), sign) pairs.
inline std::vector<std::pair<Weight, int>> signed_rho_orbit(const RootSystem& rs) {
  std::map<Weight, int> seen{{rs.rho(), 1}};
  std::vector<Weight> frontier{rs.rho()};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (auto& v : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        Weight u = v;
        rs.reflect(u, i);
        if (seen.emplace(u, -seen[v]).second) next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Dominant weights that the alternating sum for the invariant count reads.
inline std::set<Weight> invariant_targets(const RootSystem& rs0) {
  std::set<Weight> out;
  for (auto& [v, s] : signed_rho_orbit(rs0)) {
    Weight w = v;
    for (int& x : w) --x;
    out.insert(rs0.dominant_rep(w).first);
  }
  return out;
}

// Multiplicity of the trivial module: sum over W of sgn(w) m(w rho - rho).
inline BigInt trivial_multiplicity(const FormalCharacter& chi, const RootSystem& rs0) {
  require(chi.rank == rs0.rank(), "character rank differs from the root system rank");
  BigInt c = 0;
  for (auto& [v, s] : signed_rho_orbit(rs0)) {
    Weight w = v;
    for (int& x : w) --x;
    c += s * chi.multiplicity(rs0, w);
  }
  ensure(c >= 0, "negative trivial multiplicity; input is not a character");
  return c;
}

// ---------------------------------------------------------------------------
// On-disk character cache. Layout, little endian:
//   "ADJCHAR\0" | u32 version | u8 family | u32 rank | rank x i32 highest weight
//   | u64 entry count | entries sorted by weight: rank x i32, u32 nbytes,
//   nbytes of big-endian magnitude.

namespace cache {

constexpr std::uint32_t kVersion = 1;

inline void put_u32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline void put_u64(std::string& s, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline std::string serialize(char family, const Weight& lambda, const FormalCharacter& chi) {
  std::string s("ADJCHAR\0", 8);
  put_u32(s, kVersion);
  s.push_back(family);
  put_u32(s, static_cast<std::uint32_t>(lambda.size()));
  for (int x : lambda) put_u32(s, static_cast<std::uint32_t>(x));
  put_u64(s, chi.entries.size());
  for (auto& [w, m] : chi.entries) {
    for (int x : w) put_u32(s, static_cast<std::uint32_t>(x));
    std::vector<unsigned char> bytes;
    boost::multiprecision::export_bits(m, std::back_inserter(bytes), 8);
    put_u32(s, static_cast<std::uint32_t>(bytes.size()));
    s.append(bytes.begin(), bytes.end());
  }
  return s;
}

inline std::optional<FormalCharacter> deserialize(const std::string& s, char family, const Weight& lambda) {
  size_t pos = 0;
  auto need = [&](size_t k) { return pos + k <= s.size(); };
  auto u32 = [&]() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[pos++])) << (8 * i);
    return v;
  };
  if (!need(8) || s.compare(0, 8, std::string("ADJCHAR\0", 8)) != 0) return std::nullopt;
  pos = 8;
  if (!need(9) || u32() != kVersion || s[pos++] != family) return std::nullopt;
  std::uint32_t rank = u32();
  if (rank != lambda.size() || !need(4 * rank + 8)) return std::nullopt;
  for (int x : lambda)
    if (static_cast<int>(u32()) != x) return std::nullopt;
  std::uint64_t count = 0;
  for (int i = 0; i < 8; ++i) count |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos++])) << (8 * i);
  FormalCharacter chi;
  chi.rank = static_cast<int>(rank);
  for (std::uint64_t e = 0; e < count; ++e) {
    if (!need(4 * rank + 4)) return std::nullopt;
    Weight w(rank);
    for (auto& x : w) x = static_cast<int>(u32());
    std::uint32_t nb = u32();
    if (!need(nb)) return std::nullopt;
    BigInt m;
    boost::multiprecision::import_bits(m, s.begin() + pos, s.begin() + pos + nb, 8);
    pos += nb;
    chi.entries[w] = m;
  }
  if (pos != s.size()) return std::nullopt;
  return chi;
}

inline std::filesystem::path file_name(const std::filesystem::path& dir, char family, const Weight& lambda) {
  std::string name = std::string("char_") + family + std::to_string(lambda.size());
  for (int x : lambda) name += "_" + std::to_string(x);
  return dir / (name + ".bin");
}

}  // namespace cache

inline FormalCharacter cached_character(const RootSystem& rs, char family, const Weight& lambda,
                                        const std::optional<std::filesystem::path>& dir) {
  if (!dir) return freudenthal_character(rs, lambda);
  auto path = cache::file_name(*dir, family, lambda);
  if (std::ifstream in{path, std::ios::binary}) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (auto chi = cache::deserialize(data, family, lambda)) return *chi;
  }
  auto chi = freudenthal_character(rs, lambda);
  std::filesystem::create_directories(*dir);
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  auto data = cache::serialize(family, lambda, chi);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  return chi;
}

struct RingDimensionOptions {
  int workers = 1;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<Matrix<int>> matrix;  // use this matrix instead of the derived one
};

// dim of the Levi invariants in V(d lambda_n) of Sp(g_-1).
inline BigInt ring_dimension(const ContactGrading& g, int d, const RingDimensionOptions& opt = {}) {
  require(g.type().family != Family::C, "type C: the symplectic group acts transitively on the PDE bundle");
  require(d >= 1, "degree must be at least 1");
  const int n = g.n();
  BranchingMatrix b = opt.matrix ? fixture_branching_matrix(g, *opt.matrix) : build_branching_matrix(g);
  RootSystem sp = symplectic_root_system(n);
  Weight lambda(n, 0);
  lambda[n - 1] = d;
  FormalCharacter chi = cached_character(sp, 'C', lambda, opt.cache_dir);
  PushforwardOptions po;
  po.workers = opt.workers;
  po.targets = invariant_targets(g.levi());
  auto pushed = pushforward(chi, b, g.levi(), po);
  return trivial_multiplicity(pushed, g.levi());
}

inline BigInt ring_dimension(CartanType t, int d, const RingDimensionOptions& opt = {}) {
  return ring_dimension(ContactGrading(t), d, opt);
}

}  // namespace adjoint
