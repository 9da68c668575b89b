#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hhcw/hermitian.hpp"

namespace hhcw {

struct HwhcDecomposition {
  WeylElement x;  // in kW
  WeylElement w;  // w = w_c x
  Weight lambda;  // -w rho - rho
};

// L(-w rho - rho) is a highest weight Harish-Chandra module iff w = w_c x with x in kW.
inline std::optional<HwhcDecomposition> decompose_hwhc(const HermitianPair& pair, const WeylElement& w) {
  WeylElement x = pair.w_c().inverse() * w;
  if (!is_minimal_coset_rep(x, pair)) return std::nullopt;
  const auto& rho = pair.rs().rho();
  return HwhcDecomposition{x, w, -w.apply(rho) - rho};
}

struct UnitarityVerdict {
  bool unitary = false;
  std::set<int> subdiagram;
};

inline UnitarityVerdict is_unitary(const PairPtr& pair, const WeylElement& x) {
  PIdeal I = element_to_ideal(pair, x);
  if (I.empty()) return {true, {}};
  std::set<int> S = support(x);
  const auto& rs = pair->rs();
  if (!S.count(pair->noncompact_index())) return {false, S};
  // Connectivity of S in the Dynkin graph.
  std::set<int> reached{pair->noncompact_index()};
  std::vector<int> stack{pair->noncompact_index()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : S)
      if (!reached.count(v) && rs.adjacent(u, v)) {
        reached.insert(v);
        stack.push_back(v);
      }
  }
  if (reached != S) return {false, S};
  return {I.mask() == pair->saturated_mask(S), S};
}

inline Rational z_value(const HermitianPair& pair, const Weight& lambda) {
  const auto& rs = pair.rs();
  return rs.copairing(lambda + rs.rho(), rs.highest_root());
}

// Harish-Chandra cascade inside a subsystem: highest noncompact root first, then
// repeatedly the highest one strongly orthogonal to everything chosen so far.
inline std::vector<Root> split_rank_cascade(const HermitianPair& pair, const RootSubsystem& sub) {
  const auto& rs = pair.rs();
  std::vector<Root> cand;
  for (const auto& g : sub.positive)
    if (!pair.is_compact(g)) cand.push_back(g);
  std::vector<Root> chosen;
  for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
    bool ok = true;
    for (const auto& d : chosen)
      if (rs.form(*it, d) != 0 || sub.contains(*it + d) || sub.contains(*it - d)) { ok = false; break; }
    if (ok) chosen.push_back(*it);
  }
  return chosen;
}

inline int split_rank(const HermitianPair& pair, const RootSubsystem& sub) {
  return static_cast<int>(split_rank_cascade(pair, sub).size());
}

struct QRSystems {
  RootSubsystem Q;
  RootSubsystem R;
};

inline RootSubsystem component_containing(const RootSubsystem& sub, const Root& g) {
  for (auto& c : simple_components(sub))
    if (c.contains(g)) return c;
  throw Error(errc::internal_inconsistency, "root not found in any component");
}

inline QRSystems qr_systems(const PairPtr& pair, const Weight& lambda) {
  const auto& rs = pair->rs();
  const Root& beta = rs.highest_root();
  std::vector<Root> seeds{beta};
  for (const auto& a : pair->compact_positive())
    if (rs.form(lambda, a) == 0) seeds.push_back(a);
  RootSubsystem Q = component_containing(subsystem_generated(pair->system(), seeds), -beta);

  std::vector<Root> extra;
  if (rs.two_root_lengths()) {
    for (const auto& a : pair->compact_positive())
      for (const Root& s : {a, Root(-a)}) {
        if (rs.is_long(s) || rs.copairing(lambda, s) != 1) continue;
        bool touches = std::any_of(Q.roots.begin(), Q.roots.end(),
                                   [&](const Root& g) { return rs.form(g, s) != 0; });
        if (touches) extra.push_back(s);
      }
  }
  if (extra.empty()) return {Q, Q};
  seeds.insert(seeds.end(), extra.begin(), extra.end());
  RootSubsystem R = component_containing(subsystem_generated(pair->system(), seeds), -beta);
  return {Q, R};
}

// b = h_Q - 1 + (r_R - r_Q) / 2.
inline Rational last_reduction_point(const PairPtr& pair, const Weight& lambda) {
  auto qr = qr_systems(pair, lambda);
  return Rational(qr.Q.dual_coxeter_number() - 1) +
         Rational(split_rank(*pair, qr.R) - split_rank(*pair, qr.Q), 2);
}

// z_k = (rho, beta^vee) - k c.
inline Rational z_k(const HermitianPair& pair, int k) {
  return Rational(pair.constants().hvee - 1) - Rational(k) * pair.constants().c;
}

struct GkAv {
  Rational gk_dim;
  int k_index = 0;
};

inline std::optional<GkAv> try_gk_and_av(const HermitianPair& pair, const Weight& lambda) {
  const auto& rs = pair.rs();
  const auto& K = pair.constants();
  Rational k = -rs.copairing(lambda, rs.highest_root()) / K.c;
  if (k > Rational(K.r - 1)) return GkAv{Rational(K.r) * z_k(pair, K.r - 1), K.r};
  if (!is_integer(k) || k < 0) return std::nullopt;
  int ki = static_cast<int>(k.numerator());
  if (ki == 0) return GkAv{Rational(0), 0};
  return GkAv{Rational(ki) * z_k(pair, ki - 1), ki};
}

inline GkAv gk_and_av(const HermitianPair& pair, const Weight& lambda) {
  auto g = try_gk_and_av(pair, lambda);
  if (!g) throw Error(errc::not_unitary, "k = -(lambda, beta^vee)/c is not an admissible index");
  return *g;
}

// Same index read from z: z = z_k, with every z below z_{r-1} collapsed to r.
inline std::optional<int> k_index_from_z(const HermitianPair& pair, const Rational& z) {
  const int r = pair.constants().r;
  if (z < z_k(pair, r - 1)) return r;
  for (int k = 0; k < r; ++k)
    if (z == z_k(pair, k)) return k;
  return std::nullopt;
}

inline int dual_coxeter_of_subdiagram(const HermitianPair& pair, const std::set<int>& S) {
  if (S.empty()) return 0;
  std::vector<Root> seeds;
  for (int i : S) seeds.push_back(pair.rs().simple_root(i));
  return subsystem_generated(pair.system(), seeds).dual_coxeter_number();
}

inline WeylElement subdiagram_element(const PairPtr& pair, const std::set<int>& S) {
  return ideal_to_element(PIdeal(pair, pair->saturated_mask(S)));
}

struct CatalogEntry {
  std::set<int> subdiagram;
  WeylElement x;
  Weight lambda;
  std::vector<Rational> lambda_fundamental;
  int hvee_sub = 0;
  GkAv gk;
};

inline std::vector<CatalogEntry> unitary_catalog(const PairPtr& pair) {
  std::vector<std::set<int>> all{{}};
  for (const auto& s : pair->connected_subdiagrams()) all.push_back(s);
  std::vector<CatalogEntry> out;
  for (const auto& S : all) {
    WeylElement x = subdiagram_element(pair, S);
    Weight l = weight_of(*pair, x);
    out.push_back({S, x, l, pair->rs().fundamental_coordinates(l), dual_coxeter_of_subdiagram(*pair, S),
                   gk_and_av(*pair, l)});
  }
  return out;
}

// Cell counts from the closed-form table.
inline int nk_closed_form(const HermitianPair& pair, int k) {
  const int r = pair.constants().r;
  if (k < 0 || k > r) throw Error(errc::k_out_of_range, std::to_string(k));
  if (k == 0) return 1;
  const int n = pair.n();
  switch (pair.family()) {
    case PairFamily::su: {
      int p = std::min(pair.p(), pair.q()), q = std::max(pair.p(), pair.q());
      return k < r ? k + 1 : p * (2 * q - p - 1) / 2 + 1;
    }
    case PairFamily::sp:
      if (k == n) return n / 2 + 1;
      return k % 2 ? 0 : 1;
    case PairFamily::so_star:
      if (k == r) return 3 * n - 3 * r - 3;
      if (k == r - 1) return n % 2 ? 1 : 2;
      return 1;
    case PairFamily::so_odd: return k == 1 ? 0 : n;
    case PairFamily::so_even: return k == 1 ? 2 : n - 1;
    case PairFamily::e6: return k == 1 ? 0 : 8;
    case PairFamily::e7: return k == 1 ? 0 : (k == 2 ? 1 : 8);
  }
  return -1;
}

// Cell counts by counting subdiagrams with the matching dual Coxeter number.
inline int nk_from_subdiagrams(const HermitianPair& pair, int k) {
  const auto& K = pair.constants();
  if (k < 0 || k > K.r) throw Error(errc::k_out_of_range, std::to_string(k));
  int count = k == K.r ? 1 : 0;
  Rational bound = Rational(K.hvee) - Rational(k) * K.c;
  Rational last = Rational(K.hvee) - Rational(K.r - 1) * K.c;
  for (const auto& S : pair.connected_subdiagrams()) {
    Rational h(dual_coxeter_of_subdiagram(pair, S));
    if (k < K.r ? h == bound : h < last) ++count;
  }
  return count;
}

// Cell counts by direct census of unitary elements of kW.
inline std::vector<int> nk_census(const PairPtr& pair) {
  std::vector<int> n(pair->constants().r + 1, 0);
  for (const auto& I : enumerate_kW(pair)) {
    WeylElement x = ideal_to_element(I);
    if (!is_unitary(pair, x).unitary) continue;
    n[gk_and_av(*pair, weight_of(*pair, x)).k_index]++;
  }
  return n;
}

inline int count_Nk(const PairPtr& pair, int k) {
  if (k < 0 || k > pair->constants().r) throw Error(errc::k_out_of_range, std::to_string(k));
  return nk_census(pair)[k];
}

}  // namespace hhcw
