#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hhcw/rootsys.hpp"

namespace hhcw {

// Simple-root indices, 1-based.
using Word = std::vector<int>;

inline std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

// Accepts "3,2,4"; "" and "e" denote the identity.
inline Word parse_word(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "e") return {};
  Word w;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(errc::parse_error, "bad word '" + text + "'");
    w.push_back(std::stoi(tok));
  }
  if (!t.empty() && t.back() == ',') throw Error(errc::parse_error, "bad word '" + text + "'");
  return w;
}

class WeylElement {
 public:
  WeylElement(RootSystemPtr rs, RationalMatrix m) : rs_(std::move(rs)), m_(std::move(m)) {}

  static WeylElement identity(RootSystemPtr rs) {
    auto n = rs->dim();
    return WeylElement(std::move(rs), RationalMatrix::identity(n));
  }

  const RootSystemPtr& system() const { return rs_; }
  const RationalMatrix& matrix() const { return m_; }

  Weight apply(const Weight& l) const { return m_ * l; }
  Weight operator()(const Weight& l) const { return apply(l); }

  // Orthogonal over Q, so the inverse is the transpose.
  WeylElement inverse() const { return WeylElement(rs_, m_.transpose()); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.rs_->dim() != b.rs_->dim()) throw Error(errc::dimension_mismatch, "elements of different systems");
    return WeylElement(a.rs_, a.m_ * b.m_);
  }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.m_ < b.m_; }

 private:
  RootSystemPtr rs_;
  RationalMatrix m_;
};

inline WeylElement reflection(const RootSystemPtr& rs, const Root& a) {
  const std::size_t n = rs->dim();
  RationalMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    Weight col = rs->reflect(unit_vector(n, j), a);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return WeylElement(rs, m);
}

inline WeylElement simple_reflection(const RootSystemPtr& rs, int i) { return reflection(rs, rs->simple_root(i)); }

inline WeylElement compose(const WeylElement& a, const WeylElement& b) { return a * b; }
inline WeylElement inverse(const WeylElement& w) { return w.inverse(); }
inline Weight apply(const WeylElement& w, const Weight& l) { return w.apply(l); }

inline WeylElement from_word(const RootSystemPtr& rs, const Word& word) {
  WeylElement w = WeylElement::identity(rs);
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

// Phi_w = { gamma > 0 : w^{-1} gamma < 0 }, in canonical order.
inline std::vector<Root> inversion_set(const WeylElement& w) {
  const auto& rs = *w.system();
  Weight wr = w.apply(rs.rho());
  std::vector<Root> out;
  for (const auto& g : rs.positive_roots())
    if (rs.form(wr, g) < 0) out.push_back(g);
  return out;
}

inline int length(const WeylElement& w) { return static_cast<int>(inversion_set(w).size()); }

inline std::set<int> descents_right(const WeylElement& w) {
  const auto& rs = *w.system();
  Weight ir = w.inverse().apply(rs.rho());
  std::set<int> d;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.form(ir, rs.simple_root(i)) < 0) d.insert(i);
  return d;
}

inline std::set<int> descents_left(const WeylElement& w) {
  const auto& rs = *w.system();
  Weight wr = w.apply(rs.rho());
  std::set<int> d;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.form(wr, rs.simple_root(i)) < 0) d.insert(i);
  return d;
}

enum class Peel { smallest_right, largest_right, smallest_left };

inline Word reduced_word(const WeylElement& w, Peel how = Peel::smallest_right) {
  const auto& rs = w.system();
  WeylElement cur = w;
  Word rev;
  for (;;) {
    auto d = how == Peel::smallest_left ? descents_left(cur) : descents_right(cur);
    if (d.empty()) break;
    int i = how == Peel::largest_right ? *d.rbegin() : *d.begin();
    if (how == Peel::smallest_left) cur = simple_reflection(rs, i) * cur;
    else cur = cur * simple_reflection(rs, i);
    rev.push_back(i);
  }
  if (how != Peel::smallest_left) std::reverse(rev.begin(), rev.end());
  return rev;
}

inline std::set<int> support(const WeylElement& w) {
  Word r = reduced_word(w);
  return std::set<int>(r.begin(), r.end());
}

// Longest element of the parabolic subgroup generated by the simple reflections in I.
inline WeylElement longest_parabolic(const RootSystemPtr& rs, const std::set<int>& I) {
  WeylElement w = WeylElement::identity(rs);
  for (;;) {
    Weight ir = w.inverse().apply(rs->rho());
    int step = 0;
    for (int i : I)
      if (rs->form(ir, rs->simple_root(i)) > 0) { step = i; break; }
    if (!step) return w;
    w = w * simple_reflection(rs, step);
  }
}

inline WeylElement longest_element(const RootSystemPtr& rs) {
  std::set<int> all;
  for (int i = 1; i <= rs->rank(); ++i) all.insert(i);
  return longest_parabolic(rs, all);
}

// w lies in the set of minimal length representatives of W_I \ W.
inline bool is_minimal_coset_rep(const WeylElement& w, const std::set<int>& compact) {
  const auto& rs = *w.system();
  Weight wr = w.apply(rs.rho());
  for (int i : compact)
    if (rs.form(wr, rs.simple_root(i)) < 0) return false;
  return true;
}

}  // namespace hhcw
