#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "hhcw/error.hpp"

namespace hhcw {

// Thin wrapper over boost::rational exposing only same-type operators; boost's
// mixed integer comparisons recurse forever under C++20 rewritten comparisons.
class Rational {
 public:
  using base = boost::rational<std::int64_t>;

  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}
  Rational(std::int64_t n, std::int64_t d) : v_(n, d) {}
  Rational(const base& b) : v_(b) {}

  std::int64_t numerator() const { return v_.numerator(); }
  std::int64_t denominator() const { return v_.denominator(); }
  const base& value() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.v_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_.numerator() == b.v_.numerator() && a.v_.denominator() == b.v_.denominator();
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_.operator<(b.v_); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  base v_;
};

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad rational '" + s + "'");
  }
}

// A vector in the ambient space with exact coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : c_(n, Rational(0)) {}
  Weight(std::initializer_list<Rational> xs) : c_(xs) {}
  explicit Weight(std::vector<Rational> xs) : c_(std::move(xs)) {}

  std::size_t size() const { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += to_string(c_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

 private:
  void check(const Weight& o) const {
    if (o.size() != size()) throw Error(errc::dimension_mismatch, "weights of different dimension");
  }
  std::vector<Rational> c_;
};

using Root = Weight;

inline Weight unit_vector(std::size_t n, std::size_t i, Rational s = 1) {
  Weight w(n);
  w[i] = s;
  return w;
}

inline Rational dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw Error(errc::dimension_mismatch, "weights of different dimension");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Dense square matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.n_ != y.n_) throw Error(errc::dimension_mismatch, "matrix sizes differ");
    RationalMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const Rational& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  Weight operator*(const Weight& v) const {
    if (v.size() != n_) throw Error(errc::dimension_mismatch, "matrix and vector sizes differ");
    Weight r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Rational s(0);
      for (std::size_t j = 0; j < n_; ++j)
        if (v[j] != 0) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend bool operator!=(const RationalMatrix& x, const RationalMatrix& y) { return !(x == y); }
  friend bool operator<(const RationalMatrix& x, const RationalMatrix& y) { return x.a_ < y.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

// Gauss-Jordan elimination; throws on a singular input.
inline RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Error(errc::internal_inconsistency, "singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace hhcw
