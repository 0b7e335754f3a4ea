#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adjoint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when the caller hands over an input outside a function's domain.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal cross-check fails; never expected on valid input.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

inline void ensure(bool ok, const std::string& msg) {
  if (!ok) throw ConsistencyError(msg);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline bool is_integral(const Rational& x) { return denominator(x) == 1; }

// Elements of Q(i).
struct GaussianRational {
  Rational re = 0, im = 0;

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    GaussianRational conj{o.re / n, -o.im / n};
    return *this *= conj;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << "(" << to_string(z.re) << ")+(" << to_string(z.im) << ")i";
  }
};

template <class T>
bool is_zero(const T& x) {
  if constexpr (std::is_same_v<T, GaussianRational>) return x.is_zero();
  else return x == 0;
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Exact Gauss-Jordan elimination over a field. Returns the reduced row echelon
// form of the augmented system and the pivot columns.
template <class Field>
struct EchelonForm {
  Matrix<Field> rows;
  std::vector<int> pivots;
  int columns = 0;
};

template <class Field>
EchelonForm<Field> row_reduce(Matrix<Field> a, int columns) {
  EchelonForm<Field> out;
  out.columns = columns;
  int r = 0;
  const int m = static_cast<int>(a.size());
  for (int c = 0; c < columns && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!is_zero(a[i][c])) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Field inv = Field(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Field f = a[i][c];
      for (size_t k = c; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

// Solves A x = b exactly; throws unless the solution exists and is unique.
inline std::vector<Rational> solve_unique(const Matrix<Rational>& A, const std::vector<Rational>& b) {
  const int m = static_cast<int>(A.size());
  require(m == static_cast<int>(b.size()), "row count mismatch");
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  Matrix<Rational> aug(m);
  for (int i = 0; i < m; ++i) {
    aug[i] = A[i];
    aug[i].push_back(b[i]);
  }
  auto ef = row_reduce(aug, n + 1);
  for (int p : ef.pivots) ensure(p != n, "inconsistent linear system");
  ensure(static_cast<int>(ef.pivots.size()) == n, "linear system is not uniquely solvable");
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[ef.pivots[i]] = ef.rows[i][n];
  return x;
}

template <class Field>
Field determinant(Matrix<Field> a) {
  const int n = static_cast<int>(a.size());
  Field det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(a[i][c])) { p = i; break; }
    if (p < 0) return Field(0);
    if (p != c) { std::swap(a[p], a[c]); det = -det; }
    det *= a[c][c];
    Field inv = Field(1) / a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      Field f = a[i][c] * inv;
      for (int k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace adjoint
