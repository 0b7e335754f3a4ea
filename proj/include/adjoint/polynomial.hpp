#pragma once

#include "adjoint/numeric.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace adjoint {

using Exponents = std::vector<std::uint16_t>;

// Graded lexicographic order; among equal degrees the exponent of the last
// variable is compared first, so u11 < u12 < ... < unn.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    for (size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  }
};

using Variables = std::vector<std::string>;

template <class S>
S lift_scalar(const BigInt& c) {
  if constexpr (std::is_same_v<S, GaussianRational>) return GaussianRational(Rational(c));
  else return S(c);
}

template <class C>
class Polynomial {
 public:
  using Terms = std::map<Exponents, C, GradedLex>;

  Polynomial() : vars_(std::make_shared<Variables>()) {}
  explicit Polynomial(std::shared_ptr<const Variables> vars) : vars_(std::move(vars)) {}
  explicit Polynomial(const Variables& vars) : vars_(std::make_shared<Variables>(vars)) {}

  static Polynomial constant(std::shared_ptr<const Variables> vars, const C& c) {
    Polynomial p(std::move(vars));
    if (!is_zero(c)) p.terms_[Exponents(p.nvars(), 0)] = c;
    return p;
  }

  static Polynomial variable(std::shared_ptr<const Variables> vars, int k) {
    Polynomial p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(k) = 1;
    p.terms_[e] = C(1);
    return p;
  }

  int nvars() const { return static_cast<int>(vars_->size()); }
  const Variables& variables() const { return *vars_; }
  const std::shared_ptr<const Variables>& variables_ptr() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Exponents& e, const C& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) {
      int s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (auto& [e, c] : terms_) {
      int s = 0;
      for (auto x : e) s += x;
      if (d >= 0 && s != d) return false;
      d = s;
    }
    return true;
  }

  // Greatest monomial under the canonical order.
  std::pair<Exponents, C> leading_term() const {
    require(!terms_.empty(), "zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const C& k) {
    if (is_zero(k)) terms_.clear();
    else
      for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const C& k) { return a *= k; }
  friend Polynomial operator*(const C& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.vars_);
    Exponents e(a.nvars());
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        for (size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(vars_, C(1)), b = *this;
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variables() == b.variables() && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Evaluation at a point of any commutative ring containing the integers.
  template <class S>
  S evaluate(const std::vector<S>& point) const {
    require(static_cast<int>(point.size()) == nvars(), "evaluation point has the wrong dimension");
    std::vector<std::vector<S>> powers(nvars());
    for (auto& [e, c] : terms_)
      for (int k = 0; k < nvars(); ++k) {
        auto& pk = powers[k];
        if (pk.empty()) pk.push_back(S(1));
        while (pk.size() <= e[k]) pk.push_back(pk.back() * point[k]);
      }
    S acc(0);
    for (auto& [e, c] : terms_) {
      S t = lift_scalar<S>(c);
      for (int k = 0; k < nvars(); ++k)
        if (e[k]) t *= powers[k][e[k]];
      acc += t;
    }
    return acc;
  }

  // Replaces variable k by images[k]; all images share one variable set.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    require(static_cast<int>(images.size()) == nvars(), "substitution has the wrong number of images");
    require(!images.empty() || terms_.size() <= 1, "substitution into a constant needs a target ring");
    auto target = images.empty() ? vars_ : images.front().vars_;
    std::vector<std::vector<Polynomial>> powers(nvars());
    Polynomial out(target);
    for (auto& [e, c] : terms_) {
      Polynomial t = constant(target, c);
      for (int k = 0; k < nvars(); ++k) {
        if (!e[k]) continue;
        auto& pk = powers[k];
        if (pk.empty()) pk.push_back(constant(target, C(1)));
        while (pk.size() <= e[k]) pk.push_back(pk.back() * images[k]);
        t *= pk[e[k]];
      }
      out += t;
    }
    return out;
  }

  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c < 0;
      C mag = neg ? C(-c) : c;
      if (first) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      first = false;
      std::string mono;
      for (int k = 0; k < nvars(); ++k) {
        if (!e[k]) continue;
        if (!mono.empty()) mono += "*";
        mono += (*vars_)[k];
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) s += to_string(mag);
      else if (mag == 1) s += mono;
      else s += to_string(mag) + "*" + mono;
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::object();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string key = "[";
      for (size_t k = 0; k < it->first.size(); ++k) key += (k ? "," : "") + std::to_string(it->first[k]);
      terms[key + "]"] = to_string(it->second);
    }
    return {{"variables", *vars_}, {"terms", terms}};
  }

  static Polynomial from_json(const nlohmann::json& j) {
    Polynomial p(j.at("variables").get<Variables>());
    for (auto& [key, val] : j.at("terms").items()) {
      auto ev = nlohmann::json::parse(key).template get<std::vector<int>>();
      require(static_cast<int>(ev.size()) == p.nvars(), "exponent vector has the wrong length");
      Exponents e(ev.begin(), ev.end());
      p.add_term(e, C(val.template get<std::string>()));
    }
    return p;
  }

  // Accepts the canonical rendering and, more generally, integer expressions
  // built from +, -, *, ^ and parentheses over the given variables.
  static Polynomial parse(const std::string& text, std::shared_ptr<const Variables> vars);
  static Polynomial parse(const std::string& text, const Variables& vars) {
    return parse(text, std::make_shared<Variables>(vars));
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (vars_ != o.vars_ && *vars_ != *o.vars_) throw PreconditionError("polynomials over different variables");
  }

  std::shared_ptr<const Variables> vars_;
  Terms terms_;
};

namespace detail {

template <class C>
class ExpressionParser {
 public:
  using P = Polynomial<C>;
  ExpressionParser(const std::string& s, std::shared_ptr<const Variables> vars) : s_(s), vars_(std::move(vars)) {}

  P run() {
    P p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw PreconditionError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P sum() {
    P acc(vars_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    P t = product();
    acc += neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else return acc;
    }
  }

  P product() {
    P acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }

  P power() {
    P base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  P atom() {
    skip();
    if (eat('(')) {
      P p = sum();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return P::constant(vars_, C(s_.substr(start, pos_ - start)));
    }
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("term expected");
    std::string name = s_.substr(start, pos_ - start);
    for (size_t k = 0; k < vars_->size(); ++k)
      if ((*vars_)[k] == name) return P::variable(vars_, static_cast<int>(k));
    fail("unknown variable '" + name + "'");
  }

  const std::string& s_;
  std::shared_ptr<const Variables> vars_;
  size_t pos_ = 0;
};

}  // namespace detail

template <class C>
Polynomial<C> Polynomial<C>::parse(const std::string& text, std::shared_ptr<const Variables> vars) {
  return detail::ExpressionParser<C>(text, std::move(vars)).run();
}

using IntPolynomial = Polynomial<BigInt>;

// Content 1 and positive leading coefficient.
inline IntPolynomial normalize(IntPolynomial p) {
  if (p.is_zero_poly()) return p;
  BigInt g = 0;
  for (auto& [e, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
  if (p.leading_term().second < 0) g = -g;
  IntPolynomial out(p.variables_ptr());
  for (auto& [e, c] : p.terms()) out.add_term(e, c / g);
  return out;
}

// Determinant of a square matrix over a commutative ring by cofactor
// expansion, memoised on the set of remaining columns.
template <class R>
R laplace_determinant(const Matrix<R>& m, const R& zero, const R& one) {
  const int n = static_cast<int>(m.size());
  require(n <= 20, "matrix too large for cofactor expansion");
  std::map<std::uint32_t, R> memo;
  std::function<R(int, std::uint32_t)> rec = [&](int row, std::uint32_t cols) -> R {
    if (row == n) return one;
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    R acc = zero;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(cols >> c & 1u)) continue;
      const R& entry = m[row][c];
      bool skip = false;
      if constexpr (std::is_same_v<R, IntPolynomial>) skip = entry.is_zero_poly();
      else skip = is_zero(entry);
      if (!skip) {
        R sub = rec(row + 1, cols & ~(1u << c));
        if (sign > 0) acc += entry * sub;
        else acc -= entry * sub;
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(0, n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1u)));
}

}  // namespace adjoint
