#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "hhcw/rootsys.hpp"
#include "hhcw/weyl.hpp"

namespace hhcw {

enum class PairFamily { su, sp, so_star, so_odd, so_even, e6, e7 };

struct PairConstants {
  int r = 0;
  Rational c;
  int hvee = 0;
};

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask(1) << i; }

// Box of a generalized Young diagram: row grows downward, column to the right.
struct Cell {
  int row = 0;
  int col = 0;
};

class HermitianPair;
using PairPtr = std::shared_ptr<const HermitianPair>;

class HermitianPair {
 public:
  HermitianPair(PairFamily fam, int p, int q, std::string note = {})
      : family_(fam), p_(p), q_(q), note_(std::move(note)) {
    CartanType t;
    switch (fam) {
      case PairFamily::su:
        t = {Family::A, p + q - 1};
        noncompact_ = p;
        name_ = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
        constants_ = {std::min(p, q), Rational(1), p + q};
        break;
      case PairFamily::sp:
        t = {Family::C, p};
        noncompact_ = p;
        name_ = "sp(" + std::to_string(p) + ",R)";
        constants_ = {p, Rational(1, 2), p + 1};
        break;
      case PairFamily::so_star:
        t = {Family::D, p};
        noncompact_ = p;
        name_ = "so*(" + std::to_string(2 * p) + ")";
        constants_ = {p / 2, Rational(2), 2 * p - 2};
        break;
      case PairFamily::so_odd:
        t = {Family::B, p};
        noncompact_ = 1;
        name_ = "so(2," + std::to_string(2 * p - 1) + ")";
        constants_ = {2, Rational(2 * p - 3, 2), 2 * p - 1};
        break;
      case PairFamily::so_even:
        t = {Family::D, p};
        noncompact_ = 1;
        name_ = "so(2," + std::to_string(2 * p - 2) + ")";
        constants_ = {2, Rational(p - 2), 2 * p - 2};
        break;
      case PairFamily::e6:
        t = {Family::E, 6};
        noncompact_ = 1;
        name_ = "e6(-14)";
        constants_ = {2, Rational(3), 12};
        break;
      case PairFamily::e7:
        t = {Family::E, 7};
        noncompact_ = 7;
        name_ = "e7(-25)";
        constants_ = {3, Rational(4), 18};
        break;
    }
    rs_ = build_root_system(t);
    for (int i = 1; i <= rs_->rank(); ++i)
      if (i != noncompact_) compact_.insert(i);
    build_poset();
    build_weights();
    w_c_ = std::make_unique<WeylElement>(longest_parabolic(rs_, compact_));
    w_0_ = std::make_unique<WeylElement>(longest_element(rs_));
    build_labels();
    build_subdiagrams();
    build_layout();
  }

  PairFamily family() const { return family_; }
  // su: (p, q); every other family: (n, 0).
  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_; }
  const std::string& name() const { return name_; }
  // Non-empty when the requested name was an isomorphic low-rank alias.
  const std::string& note() const { return note_; }

  const RootSystemPtr& system() const { return rs_; }
  const RootSystem& rs() const { return *rs_; }
  int noncompact_index() const { return noncompact_; }
  const std::set<int>& compact_indices() const { return compact_; }
  const PairConstants& constants() const { return constants_; }

  const std::vector<Root>& compact_positive() const { return compact_pos_; }
  const std::vector<Root>& pplus() const { return pplus_; }
  int pplus_size() const { return static_cast<int>(pplus_.size()); }
  const Weight& rho_c() const { return rho_c_; }
  const Weight& rho_n() const { return rho_n_; }
  const Weight& zeta() const { return zeta_; }
  bool is_compact(const Root& g) const { return rs_->simple_coefficients(g)[noncompact_ - 1] == 0; }

  // Index of gamma in pplus(), or -1.
  int pplus_index(const Root& g) const {
    int i = rs_->positive_index(g);
    return i < 0 ? -1 : pplus_of_positive_[i];
  }
  const std::vector<int>& up_covers(int i) const { return up_[i]; }
  const std::vector<int>& down_covers(int i) const { return down_[i]; }
  // Strict down-set of pplus()[i].
  Mask below(int i) const { return below_[i]; }
  Mask full_mask() const { return pplus_.size() == 64 ? ~Mask(0) : bit(static_cast<int>(pplus_.size())) - 1; }
  int lex_rank(int i) const { return lex_rank_[i]; }

  const WeylElement& w_c() const { return *w_c_; }
  const WeylElement& w_0() const { return *w_0_; }

  int label(int i) const { return labels_[i]; }
  const Cell& cell(int i) const { return cells_[i]; }

  // Connected subsets of the Dynkin graph that contain the noncompact node.
  const std::vector<std::set<int>>& connected_subdiagrams() const { return subdiagrams_; }
  // { gamma in pplus : supp(gamma) within S }.
  Mask saturated_mask(const std::set<int>& S) const {
    Mask m = 0;
    for (std::size_t i = 0; i < pplus_.size(); ++i) {
      const auto& s = supports_[i];
      if (std::includes(S.begin(), S.end(), s.begin(), s.end())) m |= bit(static_cast<int>(i));
    }
    return m;
  }
  const std::set<int>& root_support(int i) const { return supports_[i]; }

 private:
  void build_poset() {
    const auto& pos = rs_->positive_roots();
    pplus_of_positive_.assign(pos.size(), -1);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (is_compact(pos[i])) {
        compact_pos_.push_back(pos[i]);
      } else {
        pplus_of_positive_[i] = static_cast<int>(pplus_.size());
        pplus_.push_back(pos[i]);
      }
    }
    if (pplus_.size() > 64)
      throw Error(errc::rank_out_of_range, name_ + " has more than 64 noncompact positive roots");
    const int m = static_cast<int>(pplus_.size());
    up_.assign(m, {});
    down_.assign(m, {});
    for (int i = 0; i < m; ++i) {
      supports_.push_back(rs_->support(pplus_[i]));
      for (int s : compact_) {
        int j = pplus_index(pplus_[i] + rs_->simple_root(s));
        if (j >= 0) {
          up_[i].push_back(j);
          down_[j].push_back(i);
        }
      }
    }
    below_.assign(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j : down_[i]) below_[i] |= below_[j] | bit(j);
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this](int a, int b) { return pplus_[a] < pplus_[b]; });
    lex_rank_.assign(m, 0);
    for (int k = 0; k < m; ++k) lex_rank_[order[k]] = k;
  }

  void build_weights() {
    const auto n = rs_->dim();
    rho_c_ = Rational(1, 2) * root_sum(n, compact_pos_);
    rho_n_ = Rational(1, 2) * root_sum(n, pplus_);
    zeta_ = rs_->fundamental_weight(noncompact_);
    bool ok = rs_->copairing(zeta_, rs_->highest_root()) == 1;
    for (const auto& a : compact_pos_) ok = ok && rs_->form(zeta_, a) == 0;
    if (!ok) throw Error(errc::internal_inconsistency, "zeta fails its defining properties");
  }

  // f(gamma) = v^{-1} gamma, where v = s_{b_m} ... s_{b_1} runs over the strict
  // down-set of gamma in canonical order.
  void build_labels() {
    const int m = pplus_size();
    for (int i = 0; i < m; ++i) {
      WeylElement v = WeylElement::identity(rs_);
      for (int j = 0; j < m; ++j)
        if (below_[i] & bit(j)) v = reflection(rs_, pplus_[j]) * v;
      Root f = v.inverse().apply(pplus_[i]);
      int label = 0;
      for (int s = 1; s <= rs_->rank(); ++s)
        if (rs_->simple_root(s) == f) label = s;
      if (!label) throw Error(errc::internal_inconsistency, "f-label is not a simple root");
      labels_.push_back(label);
    }
  }

  void build_subdiagrams() {
    std::set<std::set<int>> seen{{noncompact_}};
    std::vector<std::set<int>> frontier{{noncompact_}};
    while (!frontier.empty()) {
      std::vector<std::set<int>> next;
      for (const auto& s : frontier)
        for (int i : s)
          for (int j = 1; j <= rs_->rank(); ++j)
            if (!s.count(j) && rs_->adjacent(i, j)) {
              auto t = s;
              t.insert(j);
              if (seen.insert(t).second) next.push_back(t);
            }
      frontier = std::move(next);
    }
    subdiagrams_.assign(seen.begin(), seen.end());
    std::stable_sort(subdiagrams_.begin(), subdiagrams_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }

  // Drawing priority: smaller goes right when two placements score equally.
  double drawing_rank(int label) const {
    if (rs_->cartan_type().family == Family::E && label == 2) return std::numeric_limits<double>::infinity();
    return label;
  }

  void build_layout() {
    const int m = pplus_size();
    cells_.assign(m, {});
    std::map<std::pair<int, int>, int> at;
    std::map<int, std::vector<int>> diag_labels;
    auto occupied = [&](int r, int c) { return at.count({r, c}) > 0; };
    auto place = [&](int i, int r, int c) {
      cells_[i] = {r, c};
      at[{r, c}] = i;
      diag_labels[c - r].push_back(labels_[i]);
    };
    // Boxes on the same diagonal agreeing with the label, minus those disagreeing.
    auto score = [&](int i, int r, int c) {
      int s = 0;
      for (int l : diag_labels[c - r]) s += l == labels_[i] ? 1 : -1;
      return s;
    };
    auto free_for = [&](int r, int c, int parent) {
      if (occupied(r, c)) return false;
      const int dr[] = {0, 0, 1, -1}, dc[] = {1, -1, 0, 0};
      for (int k = 0; k < 4; ++k) {
        auto it = at.find({r + dr[k], c + dc[k]});
        if (it != at.end() && it->second != parent) return false;
      }
      return true;
    };

    std::vector<std::vector<int>> levels;
    for (int i = 0; i < m; ++i) {
      int h = rs_->height(pplus_[i]) - 1;
      if (static_cast<int>(levels.size()) <= h) levels.resize(h + 1);
      levels[h].push_back(i);
    }
    for (const auto& level : levels) {
      std::map<int, std::vector<int>> by_parent;
      for (int i : level) {
        if (down_[i].empty()) {
          place(i, 0, 0);
        } else if (down_[i].size() == 2) {
          Cell a = cells_[down_[i][0]], b = cells_[down_[i][1]];
          int r = std::max(a.row, b.row), c = std::max(a.col, b.col);
          bool fits = (a.row == r && a.col == c - 1 && b.row == r - 1 && b.col == c) ||
                      (b.row == r && b.col == c - 1 && a.row == r - 1 && a.col == c);
          if (!fits || occupied(r, c)) throw Error(errc::internal_inconsistency, "poset is not planar as drawn");
          place(i, r, c);
        } else {
          by_parent[down_[i][0]].push_back(i);
        }
      }
      for (auto& [parent, kids] : by_parent) {
        Cell pc = cells_[parent];
        Cell right{pc.row, pc.col + 1}, down{pc.row + 1, pc.col};
        if (kids.size() == 1) {
          int i = kids[0];
          bool okr = free_for(right.row, right.col, parent), okd = free_for(down.row, down.col, parent);
          if (!okr && !okd) throw Error(errc::internal_inconsistency, "no room to draw a box");
          bool go_right = okr && (!okd || score(i, right.row, right.col) >= score(i, down.row, down.col));
          Cell t = go_right ? right : down;
          place(i, t.row, t.col);
        } else if (kids.size() == 2) {
          if (!free_for(right.row, right.col, parent) || !free_for(down.row, down.col, parent))
            throw Error(errc::internal_inconsistency, "no room to draw two boxes");
          int a = kids[0], b = kids[1];
          int s1 = score(a, right.row, right.col) + score(b, down.row, down.col);
          int s2 = score(b, right.row, right.col) + score(a, down.row, down.col);
          bool a_right = s1 > s2 || (s1 == s2 && drawing_rank(labels_[a]) <= drawing_rank(labels_[b]));
          place(a_right ? a : b, right.row, right.col);
          place(a_right ? b : a, down.row, down.col);
        } else {
          throw Error(errc::internal_inconsistency, "more than two upper covers");
        }
      }
    }
    // Adjacency of boxes must coincide with the cover relation.
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        int dist = std::abs(cells_[i].row - cells_[j].row) + std::abs(cells_[i].col - cells_[j].col);
        bool cov = std::find(up_[i].begin(), up_[i].end(), j) != up_[i].end() ||
                   std::find(up_[j].begin(), up_[j].end(), i) != up_[j].end();
        if (dist == 0 || (dist == 1) != cov) throw Error(errc::internal_inconsistency, "diagram layout broke adjacency");
      }
  }

  PairFamily family_;
  int p_, q_;
  std::string note_;
  std::string name_;
  RootSystemPtr rs_;
  int noncompact_ = 0;
  std::set<int> compact_;
  PairConstants constants_;
  std::vector<Root> compact_pos_;
  std::vector<Root> pplus_;
  std::vector<int> pplus_of_positive_;
  std::vector<std::set<int>> supports_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<Mask> below_;
  std::vector<int> lex_rank_;
  Weight rho_c_, rho_n_, zeta_;
  std::unique_ptr<WeylElement> w_c_, w_0_;
  std::vector<int> labels_;
  std::vector<std::set<int>> subdiagrams_;
  std::vector<Cell> cells_;
};

inline PairPtr make_hermitian_pair(PairFamily fam, int p, int q = 0, std::string note = {}) {
  return std::make_shared<const HermitianPair>(fam, p, q, std::move(note));
}

inline PairPtr pair_from_name(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  std::smatch m;
  auto num = [&](int k) {
    try {
      return std::stoi(m[k].str());
    } catch (const std::exception&) {
      throw Error(errc::rank_out_of_range, "parameter too large in '" + raw + "'");
    }
  };
  if (std::regex_match(s, m, std::regex(R"(su\((\d+),(\d+)\))"))) {
    int p = num(1), q = num(2);
    if (p < 1 || q < 1) throw Error(errc::rank_out_of_range, raw);
    return make_hermitian_pair(PairFamily::su, p, q);
  }
  if (std::regex_match(s, m, std::regex(R"(sp\((\d+),r\))"))) {
    int n = num(1);
    if (n < 2) throw Error(errc::rank_out_of_range, raw + " (need n >= 2)");
    return make_hermitian_pair(PairFamily::sp, n);
  }
  if (std::regex_match(s, m, std::regex(R"(so\*\((\d+)\))"))) {
    int d = num(1);
    if (d % 2) throw Error(errc::unknown_pair, raw + " (argument must be even)");
    if (d < 8) throw Error(errc::rank_out_of_range, raw + " (need 2n >= 8)");
    return make_hermitian_pair(PairFamily::so_star, d / 2);
  }
  if (std::regex_match(s, m, std::regex(R"(so\(2,(\d+)\))"))) {
    int d = num(1);
    if (d < 3) throw Error(errc::rank_out_of_range, raw + " (need m >= 3)");
    if (d == 3) return make_hermitian_pair(PairFamily::sp, 2, 0, "so(2,3) is isomorphic to sp(2,R)");
    if (d == 4) return make_hermitian_pair(PairFamily::su, 2, 2, "so(2,4) is isomorphic to su(2,2)");
    if (d % 2) return make_hermitian_pair(PairFamily::so_odd, (d + 1) / 2);
    return make_hermitian_pair(PairFamily::so_even, (d + 2) / 2);
  }
  if (s == "e6(-14)") return make_hermitian_pair(PairFamily::e6, 6);
  if (s == "e7(-25)") return make_hermitian_pair(PairFamily::e7, 7);
  throw Error(errc::unknown_pair, "'" + raw + "'");
}

// A lower order ideal of the poset of noncompact positive roots.
class PIdeal {
 public:
  PIdeal(PairPtr pair, Mask mask) : pair_(std::move(pair)), mask_(mask) {}

  const PairPtr& pair() const { return pair_; }
  Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ & bit(i)) != 0; }
  bool subset_of(const PIdeal& o) const { return (mask_ & ~o.mask_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> v;
    for (int i = 0; i < pair_->pplus_size(); ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }
  // Roots in canonical order, which is a linear extension.
  std::vector<Root> roots() const {
    std::vector<Root> v;
    for (int i : indices()) v.push_back(pair_->pplus()[i]);
    return v;
  }
  std::vector<int> sort_key() const {
    std::vector<int> k;
    for (int i : indices()) k.push_back(pair_->lex_rank(i));
    std::sort(k.begin(), k.end());
    return k;
  }

  friend bool operator==(const PIdeal& a, const PIdeal& b) { return a.mask_ == b.mask_; }
  friend bool operator<(const PIdeal& a, const PIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.sort_key() < b.sort_key();
  }

 private:
  PairPtr pair_;
  Mask mask_;
};

inline bool is_lower_ideal(const HermitianPair& pr, Mask m) {
  for (int i = 0; i < pr.pplus_size(); ++i)
    if ((m & bit(i)) && (pr.below(i) & ~m)) return false;
  return true;
}

inline PIdeal ideal_from_roots(const PairPtr& pair, const std::vector<Root>& roots) {
  Mask m = 0;
  for (const auto& g : roots) {
    int i = pair->pplus_index(g);
    if (i < 0) throw Error(errc::not_in_pplus, g.str());
    m |= bit(i);
  }
  if (!is_lower_ideal(*pair, m)) throw Error(errc::not_an_ideal, "set is not downward closed");
  return PIdeal(pair, m);
}

inline PIdeal ideal_from_mask(const PairPtr& pair, Mask m) {
  if (m & ~pair->full_mask()) throw Error(errc::not_in_pplus, "mask has bits outside the poset");
  if (!is_lower_ideal(*pair, m)) throw Error(errc::not_an_ideal, "set is not downward closed");
  return PIdeal(pair, m);
}

inline std::vector<PIdeal> enumerate_kW(const PairPtr& pair) {
  const int m = pair->pplus_size();
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier)
      for (int i = 0; i < m; ++i)
        if (!(s & bit(i)) && (pair->below(i) & ~s) == 0) {
          Mask t = s | bit(i);
          if (seen.insert(t).second) next.push_back(t);
        }
    frontier = std::move(next);
  }
  std::vector<PIdeal> out;
  for (Mask s : seen) out.emplace_back(pair, s);
  std::sort(out.begin(), out.end());
  return out;
}

inline int f_label(const PairPtr& pair, const Root& g) {
  int i = pair->pplus_index(g);
  if (i < 0) throw Error(errc::not_in_pplus, g.str());
  return pair->label(i);
}

inline Word ideal_word(const PIdeal& I) {
  Word w;
  for (int i : I.indices()) w.push_back(I.pair()->label(i));
  return w;
}

inline WeylElement ideal_to_element(const PIdeal& I) { return from_word(I.pair()->system(), ideal_word(I)); }

// Same element built as s_{b_l} ... s_{b_1} over the ideal's roots.
inline WeylElement ideal_to_element_by_reflections(const PIdeal& I) {
  const auto& rs = I.pair()->system();
  WeylElement v = WeylElement::identity(rs);
  for (const auto& g : I.roots()) v = reflection(rs, g) * v;
  return v;
}

inline bool is_minimal_coset_rep(const WeylElement& w, const HermitianPair& pair) {
  return is_minimal_coset_rep(w, pair.compact_indices());
}

inline PIdeal element_to_ideal(const PairPtr& pair, const WeylElement& x) {
  if (!is_minimal_coset_rep(x, *pair)) throw Error(errc::not_minimal_coset_rep, "element is not in kW");
  Mask m = 0;
  for (const auto& g : inversion_set(x)) {
    int i = pair->pplus_index(g);
    if (i < 0) throw Error(errc::internal_inconsistency, "inversion outside p+");
    m |= bit(i);
  }
  return PIdeal(pair, m);
}

inline WeylElement tilde(const HermitianPair& pair, const WeylElement& x) {
  if (!is_minimal_coset_rep(x, pair)) throw Error(errc::not_minimal_coset_rep, "element is not in kW");
  return pair.w_c() * x * pair.w_0();
}

inline Weight root_sum(const HermitianPair& pair, const std::vector<Root>& s) { return root_sum(pair.rs().dim(), s); }

inline Weight weight_of(const HermitianPair& pair, const WeylElement& x) {
  WeylElement t = tilde(pair, x);
  return t.apply(pair.rs().rho()) - pair.rs().rho();
}

struct Diagram {
  std::vector<Cell> cells;
  std::vector<int> labels;
  Word linearization;
  std::string text;
};

inline Diagram render_diagram(const PIdeal& I) {
  const auto& pr = *I.pair();
  Diagram d;
  d.linearization = ideal_word(I);
  if (I.empty()) {
    d.text = "∅";
    return d;
  }
  int maxr = 0, maxc = 0;
  std::size_t width = 1;
  for (int i : I.indices()) {
    d.cells.push_back(pr.cell(i));
    d.labels.push_back(pr.label(i));
    maxr = std::max(maxr, pr.cell(i).row);
    maxc = std::max(maxc, pr.cell(i).col);
    width = std::max(width, std::to_string(pr.label(i)).size());
  }
  std::vector<std::vector<int>> grid(maxr + 1, std::vector<int>(maxc + 1, 0));
  for (std::size_t k = 0; k < d.cells.size(); ++k) grid[d.cells[k].row][d.cells[k].col] = d.labels[k];
  for (int r = 0; r <= maxr; ++r) {
    std::string line;
    for (int c = 0; c <= maxc; ++c) {
      if (grid[r][c]) {
        std::string l = std::to_string(grid[r][c]);
        line += "[" + std::string(width - l.size(), ' ') + l + "]";
      } else {
        line += std::string(width + 2, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    d.text += line + "\n";
  }
  return d;
}

}  // namespace hhcw
