#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hhcw/hermitian.hpp"

namespace hhcw {

struct PoincarePolynomial {
  std::vector<long long> coefficients;  // low degree first

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool is_palindromic() const {
    return std::equal(coefficients.begin(), coefficients.end(), coefficients.rbegin());
  }
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coefficients[i]);
    }
    return s;
  }
};

// Rank generating function of the interval below x in kW, i.e. of the ideals inside Phi_x.
inline PoincarePolynomial poincare_polynomial(const PIdeal& I) {
  const auto& pr = *I.pair();
  PoincarePolynomial p;
  p.coefficients.assign(I.size() + 1, 0);
  std::vector<Mask> frontier{0};
  std::unordered_set<Mask> seen{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier) {
      p.coefficients[std::popcount(s)]++;
      for (int i : I.indices())
        if (!(s & bit(i)) && (pr.below(i) & ~s) == 0) {
          Mask t = s | bit(i);
          if (seen.insert(t).second) next.push_back(t);
        }
    }
    frontier = std::move(next);
  }
  return p;
}

inline PoincarePolynomial poincare_polynomial(const PairPtr& pair, const WeylElement& x) {
  return poincare_polynomial(element_to_ideal(pair, x));
}

inline bool is_rationally_smooth(const PIdeal& I) { return poincare_polynomial(I).is_palindromic(); }
inline bool is_rationally_smooth(const PairPtr& pair, const WeylElement& x) {
  return is_rationally_smooth(element_to_ideal(pair, x));
}

// Smooth iff the ideal is empty or equals Phi_I cap Phi(p+) for a connected I
// containing the noncompact node.
inline bool is_smooth(const PIdeal& I) {
  if (I.empty()) return true;
  const auto& pr = *I.pair();
  for (const auto& S : pr.connected_subdiagrams())
    if (pr.saturated_mask(S) == I.mask()) return true;
  return false;
}
inline bool is_smooth(const PairPtr& pair, const WeylElement& x) { return is_smooth(element_to_ideal(pair, x)); }

using Permutation = std::vector<int>;  // one-line notation, values 1..n

inline Permutation permutation_of(const HermitianPair& pair, const WeylElement& w) {
  if (pair.rs().cartan_type().family != Family::A) throw Error(errc::wrong_type, pair.name() + " is not of type A");
  const auto& m = w.matrix();
  const std::size_t n = m.size();
  Permutation p(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, j) == 1) p[j] = static_cast<int>(i) + 1;
      else if (m(i, j) != 0) throw Error(errc::internal_inconsistency, "not a permutation matrix");
  return p;
}

inline bool contains_pattern(const Permutation& p, const Permutation& pat) {
  const int n = static_cast<int>(p.size());
  const int k = static_cast<int>(pat.size());
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int depth, int start) {
    if (depth == k) {
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if ((p[idx[a]] < p[idx[b]]) != (pat[a] < pat[b])) return false;
      return true;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline bool avoids_3412_4231(const Permutation& p) {
  return !contains_pattern(p, {3, 4, 1, 2}) && !contains_pattern(p, {4, 2, 3, 1});
}

inline PairPtr simply_laced_cover(const HermitianPair& pair) {
  switch (pair.family()) {
    case PairFamily::so_odd: return make_hermitian_pair(PairFamily::su, 1, 2 * pair.n() - 1);
    case PairFamily::sp: return make_hermitian_pair(PairFamily::so_star, pair.n() + 1);
    default: throw Error(errc::not_covered, pair.name() + " is already simply laced");
  }
}

// Order isomorphism Phi(p+) -> cover's Phi(p+), as a map of pplus indices.
inline std::vector<int> cover_poset_isomorphism(const HermitianPair& pair, const HermitianPair& cover) {
  const int m = pair.pplus_size();
  if (cover.pplus_size() != m) throw Error(errc::internal_inconsistency, "poset sizes differ");
  std::vector<int> f(m, -1);
  std::vector<bool> used(m, false);
  auto height = [](const HermitianPair& p, int i) { return p.rs().height(p.pplus()[i]); };
  std::function<bool(int)> rec = [&](int i) {
    if (i == m) return true;
    for (int j = 0; j < m; ++j) {
      if (used[j] || height(pair, i) != height(cover, j)) continue;
      if (pair.up_covers(i).size() != cover.up_covers(j).size()) continue;
      std::vector<int> img;
      for (int d : pair.down_covers(i)) img.push_back(f[d]);
      std::vector<int> tgt = cover.down_covers(j);
      std::sort(img.begin(), img.end());
      std::sort(tgt.begin(), tgt.end());
      if (img != tgt) continue;
      f[i] = j;
      used[j] = true;
      if (rec(i + 1)) return true;
      used[j] = false;
      f[i] = -1;
    }
    return false;
  };
  if (!rec(0)) throw Error(errc::internal_inconsistency, "posets are not isomorphic");
  return f;
}

inline PIdeal map_ideal(const PIdeal& I, const PairPtr& cover, const std::vector<int>& iso) {
  Mask m = 0;
  for (int i : I.indices()) m |= bit(iso[i]);
  return ideal_from_mask(cover, m);
}

}  // namespace hhcw
