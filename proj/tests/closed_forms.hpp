#pragma once

// Hand-written highest weights of the unitary modules, family by family.
// Returned in ambient coordinates; nullopt when the subdiagram is not one the
// family's formulas cover.

#include <optional>
#include <string>
#include <vector>

#include "hhcw/hhcw.hpp"

namespace oracle {

using hhcw::Rational;
using hhcw::Weight;

inline Weight constant(std::size_t n, std::vector<std::pair<int, int>> runs) {
  Weight w(n);
  std::size_t i = 0;
  for (auto [len, val] : runs)
    for (int k = 0; k < len; ++k) w[i++] = Rational(val);
  return w;
}

// e_1 + ... + e_k.
inline Weight eps(std::size_t n, int k) { return constant(n, {{k, 1}, {static_cast<int>(n) - k, 0}}); }

inline std::set<int> range(int a, int b) {
  std::set<int> s;
  for (int i = a; i <= b; ++i) s.insert(i);
  return s;
}

inline std::optional<Weight> expected_lambda(const hhcw::HermitianPair& pr, const std::set<int>& S) {
  using hhcw::PairFamily;
  const auto& rs = pr.rs();
  const std::size_t dim = rs.dim();
  auto om = [&](int k) { return rs.fundamental_weight(k); };
  auto R = [](int x) { return Rational(x); };
  const int n = pr.n();
  if (S.size() == static_cast<std::size_t>(rs.rank())) return Weight(dim);

  switch (pr.family()) {
    case PairFamily::su: {
      const int p = pr.p(), q = pr.q();
      if (S.empty()) return R(-(p + q)) * om(p);
      int a = *S.begin(), b = *S.rbegin();
      if (S != range(a, b)) return std::nullopt;
      int pp = p - a + 1, qq = b - p + 1;
      return R(qq) * om(pp) - R(p + q) * om(p) + R(pp) * om(p + q - qq);
    }
    case PairFamily::sp: {
      if (S.empty()) return R(-(n + 1)) * om(n);
      int p = n - *S.begin() + 1;
      if (S != range(n - p + 1, n)) return std::nullopt;
      return R(p + 1) * om(p) - R(n + 1) * om(n);
    }
    case PairFamily::so_odd: {
      if (S.empty()) return R(-(2 * n - 1)) * om(1);
      int p = *S.rbegin();
      if (S != range(1, p)) return std::nullopt;
      // omega_{p+1} read as e_1 + ... + e_{p+1}; differs from the fundamental weight only at p = n-1.
      return R(-(2 * n - p)) * om(1) + eps(dim, p + 1);
    }
    case PairFamily::so_even: {
      if (S.empty()) return R(-(2 * n - 2)) * om(1);
      if (S == range(1, n - 1)) return R(-n) * om(1) + R(2) * om(n % 2 == 0 ? n - 1 : n);
      auto II = range(1, n - 2);
      II.insert(n);
      if (S == II) return R(-n) * om(1) + R(2) * om(n % 2 == 0 ? n : n - 1);
      int p = *S.rbegin();
      if (S != range(1, p)) return std::nullopt;
      if (p == n - 2) return R(-(n + 1)) * om(1) + om(n - 1) + om(n);
      return R(-(2 * n - p - 1)) * om(1) + om(p + 1);
    }
    case PairFamily::so_star: {
      if (S.empty()) return constant(dim, {{n, -(n - 1)}});
      if (S.count(n - 1)) {
        int q = n - *S.begin() + 1;
        if (S != range(n - q + 1, n) || q < 3) return std::nullopt;
        return constant(dim, {{q, -(n - q)}, {n - q, -(n - 1)}});
      }
      if (!S.count(n)) return std::nullopt;
      std::set<int> rest(S);
      rest.erase(n);
      int p = static_cast<int>(S.size());
      if (!rest.empty() && rest != range(n - p, n - 2)) return std::nullopt;
      if (p == n - 1) return R(n - 2) * om(1) - R(2 * n - 4) * om(n);
      return constant(dim, {{1, -(n - p - 1)}, {p, -(n - 2)}, {n - p - 1, -(n - 1)}});
    }
    case PairFamily::e6:
    case PairFamily::e7: break;
  }
  return std::nullopt;
}

// Rows of the two exceptional tables: subdiagram and lambda as fundamental-weight coefficients.
struct ExceptionalRow {
  std::set<int> S;
  std::vector<int> lambda;
};

inline std::vector<ExceptionalRow> e6_table() {
  return {{{}, {-12, 0, 0, 0, 0, 0}},
          {{1}, {-12, 1, 0, 0, 0, 0}},
          {{1, 3}, {-12, 0, 0, 1, 0, 0}},
          {{1, 3, 4}, {-12, 0, 1, 0, 1, 0}},
          {{1, 3, 4, 5}, {-12, 0, 2, 0, 0, 1}},
          {{1, 3, 4, 2}, {-11, 0, 0, 0, 2, 0}},
          {{1, 3, 4, 5, 2}, {-8, 0, 0, 0, 0, 4}},
          {{1, 3, 4, 5, 6}, {-12, 0, 3, 0, 0, 0}},
          {{1, 2, 3, 4, 5, 6}, {0, 0, 0, 0, 0, 0}}};
}

inline std::vector<ExceptionalRow> e7_table() {
  return {{{}, {0, 0, 0, 0, 0, 0, -18}},
          {{7}, {1, 0, 0, 0, 0, 0, -18}},
          {{7, 6}, {0, 0, 1, 0, 0, 0, -18}},
          {{7, 6, 5}, {0, 0, 0, 1, 0, 0, -18}},
          {{7, 6, 5, 4}, {0, 1, 0, 0, 1, 0, -18}},
          {{7, 6, 5, 4, 3}, {0, 2, 0, 0, 0, 1, -18}},
          {{7, 6, 5, 4, 3, 1}, {0, 3, 0, 0, 0, 0, -17}},
          {{7, 6, 5, 4, 2}, {0, 0, 0, 0, 2, 0, -18}},
          {{7, 6, 5, 4, 3, 2}, {0, 0, 0, 0, 0, 5, -18}},
          {{7, 6, 5, 4, 3, 2, 1}, {0, 0, 0, 0, 0, 0, 0}}};
}

// Cell counts N_0..N_r, written out per family.
inline std::vector<int> nk_table(const hhcw::HermitianPair& pr) {
  using hhcw::PairFamily;
  const int n = pr.n();
  std::vector<int> v{1};
  switch (pr.family()) {
    case PairFamily::su: {
      int p = std::min(pr.p(), pr.q()), q = std::max(pr.p(), pr.q());
      for (int k = 1; k < p; ++k) v.push_back(k + 1);
      v.push_back(p * (2 * q - p - 1) / 2 + 1);
      break;
    }
    case PairFamily::sp:
      for (int k = 1; k < n; ++k) v.push_back(k % 2 ? 0 : 1);
      v.push_back(n / 2 + 1);
      break;
    case PairFamily::so_star: {
      int r = n / 2;
      for (int k = 1; k <= r - 2; ++k) v.push_back(1);
      v.push_back(n % 2 ? 1 : 2);
      v.push_back(3 * n - 3 * r - 3);
      break;
    }
    case PairFamily::so_odd: v.insert(v.end(), {0, n}); break;
    case PairFamily::so_even: v.insert(v.end(), {2, n - 1}); break;
    case PairFamily::e6: v.insert(v.end(), {0, 8}); break;
    case PairFamily::e7: v.insert(v.end(), {0, 1, 8}); break;
  }
  return v;
}

}  // namespace oracle
