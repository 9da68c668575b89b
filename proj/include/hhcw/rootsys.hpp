#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hhcw/error.hpp"
#include "hhcw/rational.hpp"

namespace hhcw {

enum class Family { A, B, C, D, E };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string str() const {
    static const char* names = "ABCDE";
    return std::string(1, names[static_cast<int>(family)]) + std::to_string(rank);
  }

  // B2 = C2 and D3 = A3 are folded onto one representative.
  CartanType canonical() const {
    if (family == Family::C && rank == 2) return {Family::B, 2};
    if (family == Family::D && rank == 3) return {Family::A, 3};
    return *this;
  }

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const CartanType& a, const CartanType& b) { return !(a == b); }
};

inline bool same_type(const CartanType& a, const CartanType& b) {
  return a.canonical() == b.canonical();
}

inline void validate(const CartanType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B:
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 3; break;
    case Family::E: ok = t.rank == 6 || t.rank == 7; break;
  }
  if (!ok) throw Error(errc::unsupported_type, "no root system of type " + t.str());
}

inline int dual_coxeter_of(const CartanType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank - 1;
    case Family::C: return t.rank + 1;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : 18;
  }
  return 0;
}

class RootSystem {
 public:
  explicit RootSystem(CartanType t) : type_(t) {
    validate(t);
    build_simple_roots();
    const std::size_t n = dim_;
    Rational longest(0);
    for (const auto& a : simple_) longest = std::max(longest, dot(a, a));
    scale_ = Rational(2) / longest;

    // Fundamental weights from the transpose of the Cartan matrix.
    const std::size_t r = simple_.size();
    RationalMatrix m(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m(j, k) = copairing(simple_[j], simple_[k]);
    cartan_ = m.transpose();
    RationalMatrix minv = inverse(m);
    for (std::size_t i = 0; i < r; ++i) {
      Weight w(n);
      for (std::size_t j = 0; j < r; ++j) w += minv(i, j) * simple_[j];
      fundamental_.push_back(w);
    }

    generate_roots();
  }

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  std::size_t dim() const { return dim_; }

  const std::vector<Root>& simple_roots() const { return simple_; }
  const Root& simple_root(int i) const { return simple_.at(check_index(i) - 1); }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<Root>& roots() const { return all_; }
  const Weight& rho() const { return rho_; }
  const Root& highest_root() const { return highest_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
  const Weight& fundamental_weight(int i) const { return fundamental_.at(check_index(i) - 1); }
  // cartan(i, j) = (alpha_i^vee, alpha_j), 1-based.
  Rational cartan(int i, int j) const { return cartan_(check_index(i) - 1, check_index(j) - 1); }

  Rational form(const Weight& a, const Weight& b) const {
    if (a.size() != dim_ || b.size() != dim_)
      throw Error(errc::dimension_mismatch, "weight dimension does not match the root system");
    return scale_ * dot(a, b);
  }
  Rational copairing(const Weight& l, const Root& a) const { return 2 * form(l, a) / form(a, a); }
  Weight coroot(const Root& a) const { return (Rational(2) / form(a, a)) * a; }
  Weight reflect(const Weight& l, const Root& a) const { return l - copairing(l, a) * a; }

  bool is_root(const Weight& v) const { return index_.count(v) > 0; }
  bool is_positive(const Root& v) const { return form(rho_, v) > 0; }
  // Index into positive_roots(), or -1.
  int positive_index(const Weight& v) const {
    auto it = index_.find(v);
    if (it == index_.end() || it->second < 0) return -1;
    return it->second;
  }
  bool is_long(const Root& a) const { return form(a, a) == 2; }
  bool two_root_lengths() const {
    return type_.family == Family::B || type_.family == Family::C;
  }

  // Coefficients of v on the simple roots (exact for any v in the root span).
  std::vector<Rational> simple_coefficients(const Weight& v) const {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < simple_.size(); ++j)
      c.push_back(2 * form(v, fundamental_[j]) / form(simple_[j], simple_[j]));
    return c;
  }
  int height(const Root& v) const {
    Rational h(0);
    for (const auto& x : simple_coefficients(v)) h += x;
    return static_cast<int>(h.numerator() / h.denominator());
  }
  std::set<int> support(const Root& v) const {
    std::set<int> s;
    auto c = simple_coefficients(v);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) s.insert(static_cast<int>(j) + 1);
    return s;
  }

  std::vector<Rational> fundamental_coordinates(const Weight& l) const {
    std::vector<Rational> c;
    for (const auto& a : simple_) c.push_back(copairing(l, a));
    return c;
  }
  Weight from_fundamental(const std::vector<Rational>& c) const {
    if (c.size() != simple_.size()) throw Error(errc::dimension_mismatch, "wrong number of coordinates");
    Weight w(dim_);
    for (std::size_t i = 0; i < c.size(); ++i) w += c[i] * fundamental_[i];
    return w;
  }

  int dual_coxeter_number() const {
    Rational v = copairing(rho_, highest_) + 1;
    return static_cast<int>(v.numerator() / v.denominator());
  }

  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }

  // Canonical order: height, then lexicographic coordinates.
  bool root_less(const Root& a, const Root& b) const {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  }

 private:
  int check_index(int i) const {
    if (i < 1 || i > static_cast<int>(simple_.size()))
      throw Error(errc::index_out_of_range, "simple index " + std::to_string(i));
    return i;
  }

  void build_simple_roots() {
    const int r = type_.rank;
    auto e = [this](std::size_t i) { return unit_vector(dim_, i); };
    switch (type_.family) {
      case Family::A:
        dim_ = r + 1;
        for (int i = 0; i < r; ++i) simple_.push_back(e(i) - e(i + 1));
        break;
      case Family::B:
      case Family::C:
      case Family::D:
        dim_ = r;
        for (int i = 0; i + 1 < r; ++i) simple_.push_back(e(i) - e(i + 1));
        if (type_.family == Family::B) simple_.push_back(e(r - 1));
        if (type_.family == Family::C) simple_.push_back(Rational(2) * e(r - 1));
        if (type_.family == Family::D) simple_.push_back(e(r - 2) + e(r - 1));
        break;
      case Family::E: {
        dim_ = 8;
        Rational h(1, 2);
        Weight a1(8);
        a1[0] = h;
        a1[7] = h;
        for (int i = 1; i < 7; ++i) a1[i] = -h;
        simple_.push_back(a1);
        simple_.push_back(e(0) + e(1));
        for (int i = 3; i <= r; ++i) simple_.push_back(e(i - 2) - e(i - 3));
        break;
      }
    }
  }

  void generate_roots() {
    std::set<Weight> seen(simple_.begin(), simple_.end());
    std::vector<Weight> frontier(simple_.begin(), simple_.end());
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& v : frontier)
        for (const auto& a : simple_) {
          Weight u = reflect(v, a);
          if (seen.insert(u).second) next.push_back(u);
        }
      frontier = std::move(next);
    }
    for (const auto& v : seen) {
      auto c = simple_coefficients(v);
      bool pos = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
      if (pos) positive_.push_back(v);
    }
    rho_ = Weight(dim_);
    for (const auto& v : positive_) rho_ += v;
    rho_ *= Rational(1, 2);
    std::sort(positive_.begin(), positive_.end(),
              [this](const Root& a, const Root& b) { return root_less(a, b); });
    highest_ = positive_.back();
    for (std::size_t i = 0; i < positive_.size(); ++i) {
      index_[positive_[i]] = static_cast<int>(i);
      index_[-positive_[i]] = -1;
    }
    all_.assign(seen.begin(), seen.end());
  }

  CartanType type_;
  std::size_t dim_ = 0;
  Rational scale_{1};
  std::vector<Root> simple_;
  std::vector<Weight> fundamental_;
  RationalMatrix cartan_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
  std::map<Weight, int> index_;
  Weight rho_;
  Root highest_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(CartanType t) { return std::make_shared<const RootSystem>(t); }

inline Rational pairing(const RootSystem& rs, const Weight& l, const Weight& a) { return rs.form(l, a); }
inline Rational copairing(const RootSystem& rs, const Weight& l, const Root& a) { return rs.copairing(l, a); }

inline Weight root_sum(std::size_t dim, const std::vector<Root>& s) {
  Weight w(dim);
  for (const auto& a : s) w += a;
  return w;
}

// A subset of the roots of a parent system closed under its own reflections.
struct RootSubsystem {
  RootSystemPtr parent;
  std::vector<Root> roots;     // sorted lexicographically
  std::vector<Root> positive;  // roots that are positive in the parent, canonical order
  std::vector<Root> simple;    // indecomposable positive roots

  bool contains(const Root& v) const { return std::binary_search(roots.begin(), roots.end(), v); }
  int rank() const { return static_cast<int>(simple.size()); }
  bool empty() const { return roots.empty(); }

  Weight rho() const { return Rational(1, 2) * root_sum(parent->dim(), positive); }

  // The unique positive root with no positive simple root of the subsystem above it.
  // Meaningful for an irreducible subsystem.
  Root highest_root() const {
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
      bool top = true;
      for (const auto& s : simple)
        if (contains(*it + s)) { top = false; break; }
      if (top) return *it;
    }
    throw Error(errc::internal_inconsistency, "empty subsystem has no highest root");
  }

  int dual_coxeter_number() const {
    Root t = highest_root();
    Rational v = parent->copairing(rho(), t) + 1;
    return static_cast<int>(v.numerator() / v.denominator());
  }

  friend bool operator==(const RootSubsystem& a, const RootSubsystem& b) { return a.roots == b.roots; }
};

inline RootSubsystem make_subsystem(RootSystemPtr rs, std::set<Weight> closed) {
  RootSubsystem sub;
  sub.parent = rs;
  sub.roots.assign(closed.begin(), closed.end());
  for (const auto& v : rs->positive_roots())
    if (closed.count(v)) sub.positive.push_back(v);
  for (const auto& v : sub.positive) {
    bool decomposable = false;
    for (const auto& u : sub.positive) {
      if (u == v) continue;
      Weight d = v - u;
      if (closed.count(d) && rs->is_positive(d)) { decomposable = true; break; }
    }
    if (!decomposable) sub.simple.push_back(v);
  }
  return sub;
}

inline RootSubsystem subsystem_generated(RootSystemPtr rs, const std::vector<Root>& seeds) {
  std::set<Weight> closed;
  std::vector<Weight> frontier;
  for (const auto& s : seeds) {
    if (!rs->is_root(s)) throw Error(errc::seed_not_a_root, s.str());
    if (closed.insert(s).second) frontier.push_back(s);
  }
  // Saturate under reflections in every member found so far.
  while (!frontier.empty()) {
    std::vector<Weight> next;
    std::vector<Weight> current(closed.begin(), closed.end());
    for (const auto& v : current)
      for (const auto& a : current) {
        Weight u = rs->reflect(v, a);
        if (closed.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return make_subsystem(rs, std::move(closed));
}

inline std::vector<RootSubsystem> simple_components(const RootSubsystem& sub) {
  const auto& rs = *sub.parent;
  const std::size_t k = sub.simple.size();
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < k; ++v)
        if (comp[v] < 0 && rs.form(sub.simple[u], sub.simple[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  std::vector<RootSubsystem> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Root> seeds;
    for (std::size_t s = 0; s < k; ++s)
      if (comp[s] == c) seeds.push_back(sub.simple[s]);
    out.push_back(subsystem_generated(sub.parent, seeds));
  }
  return out;
}

// Cartan-type recognition of an irreducible subsystem from its Dynkin graph.
inline CartanType classify_subsystem(const RootSubsystem& sub) {
  const auto& rs = *sub.parent;
  const auto& S = sub.simple;
  const int k = static_cast<int>(S.size());
  if (k == 0) throw Error(errc::unrecognized_type, "empty subsystem");
  if (simple_components(sub).size() != 1) throw Error(errc::unrecognized_type, "subsystem is reducible");

  std::vector<std::vector<int>> adj(k);
  int double_bonds = 0;
  int du = -1, dv = -1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Rational p = rs.copairing(S[i], S[j]) * rs.copairing(S[j], S[i]);
      if (p == 0) continue;
      if (p == 4 || p > 4) throw Error(errc::unrecognized_type, "affine or unsupported bond");
      if (p == 3) throw Error(errc::unrecognized_type, "triple bond");
      if (p == 2) {
        ++double_bonds;
        du = i;
        dv = j;
      }
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  int edges = 0;
  for (auto& a : adj) edges += static_cast<int>(a.size());
  edges /= 2;
  if (edges != k - 1) throw Error(errc::unrecognized_type, "Dynkin graph has a cycle");

  std::vector<int> branch;
  for (int i = 0; i < k; ++i)
    if (adj[i].size() > 2) branch.push_back(i);

  if (double_bonds > 1) throw Error(errc::unrecognized_type, "several double bonds");
  if (double_bonds == 1) {
    if (!branch.empty()) throw Error(errc::unrecognized_type, "branched graph with double bond");
    if (k == 2) return {Family::B, 2};
    // The double bond must sit at an end of the path.
    int end = adj[du].size() == 1 ? du : (adj[dv].size() == 1 ? dv : -1);
    if (end < 0) throw Error(errc::unrecognized_type, "double bond in the middle (F4)");
    bool end_short = rs.form(S[end], S[end]) < rs.form(S[end == du ? dv : du], S[end == du ? dv : du]);
    return {end_short ? Family::B : Family::C, k};
  }
  if (branch.empty()) return {Family::A, k};
  if (branch.size() > 1 || adj[branch[0]].size() != 3)
    throw Error(errc::unrecognized_type, "unsupported branching");

  std::vector<int> arms;
  int b = branch[0];
  for (int start : adj[b]) {
    int prev = b, cur = start, len = 1;
    while (adj[cur].size() == 2) {
      int nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nx;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return {Family::E, 6};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return {Family::E, 7};
  throw Error(errc::unrecognized_type, "E8 or larger branching");
}

}  // namespace hhcw
