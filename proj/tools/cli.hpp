#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhcw/hhcw.hpp"

namespace hhcw::cli {

using nlohmann::json;

enum exit_code { ok = 0, failure = 1, negative = 2 };

struct Options {
  std::string pair;
  std::string word;
  std::string element = "x";
  std::string format = "text";
  bool diagrams = false;
  bool verbose = false;
};

inline json envelope(const std::string& pair, json payload) {
  return json{{"schema_version", "1"}, {"pair", pair.empty() ? json(nullptr) : json(pair)}, {"payload", std::move(payload)}};
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

inline std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

struct FamilyRow {
  std::string family, r, c, hvee;
};

inline std::vector<FamilyRow> catalog_rows() {
  return {
      {"su(p,n-p)", "min(p,n-p)", "1", "n"},
      {"sp(n,R)", "n", "1/2", "n+1"},
      {"so*(2n)", "[n/2]", "2", "2n-2"},
      {"so(2,2n-1)", "2", "n-3/2", "2n-1"},
      {"so(2,2n-2)", "2", "n-2", "2n-2"},
      {"e6(-14)", "2", "3", "12"},
      {"e7(-25)", "3", "4", "18"},
  };
}

inline int cmd_catalog(const Options& o, std::ostream& out) {
  auto rows = catalog_rows();
  PairPtr pair = o.pair.empty() ? nullptr : pair_from_name(o.pair);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : rows) j.push_back({{"family", r.family}, {"r", r.r}, {"c", r.c}, {"hvee", r.hvee}});
    json payload{{"families", j}};
    if (pair) {
      const auto& K = pair->constants();
      payload["instance"] = {{"name", pair->name()}, {"r", K.r}, {"c", to_string(K.c)}, {"hvee", K.hvee}};
    }
    out << envelope(pair ? pair->name() : "", payload).dump(2) << "\n";
    return ok;
  }
  out << std::left << std::setw(14) << "family" << std::setw(13) << "r" << std::setw(8) << "c" << "h∨\n";
  for (const auto& r : rows)
    out << std::setw(14) << r.family << std::setw(13) << r.r << std::setw(8) << r.c << r.hvee << "\n";
  if (pair) {
    const auto& K = pair->constants();
    out << "\n" << pair->name() << ": r=" << K.r << " c=" << to_string(K.c) << " h∨=" << K.hvee << "\n";
  }
  return ok;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  auto pair = pair_from_name(o.pair);
  auto ideals = enumerate_kW(pair);
  int n_rs = 0, n_s = 0, n_u = 0;
  json rows = json::array();
  std::ostringstream text;
  int idx = 0;
  for (const auto& I : ideals) {
    WeylElement x = ideal_to_element(I);
    bool u = is_unitary(pair, x).unitary;
    bool rsm = is_rationally_smooth(I);
    bool sm = is_smooth(I);
    n_u += u;
    n_rs += rsm;
    n_s += sm;
    auto g = try_gk_and_av(*pair, weight_of(*pair, x));
    std::string word = format_word(ideal_word(I));
    std::string k = g ? std::to_string(g->k_index) : "n/a";
    json row{{"index", idx}, {"length", I.size()}, {"word", word}, {"unitary", u}, {"smooth", sm},
             {"rationally_smooth", rsm}, {"k_index", g ? json(g->k_index) : json("n/a")}};
    std::string diagram = o.diagrams ? render_diagram(I).text : "";
    if (o.diagrams) row["diagram"] = diagram;
    rows.push_back(row);
    text << std::setw(3) << idx << "  len " << std::setw(2) << I.size() << "  " << (u ? "U" : "-") << (sm ? "S" : "-")
         << (rsm ? "R" : "-") << "  k=" << k << "  " << (word.empty() ? "e" : word) << "\n";
    if (o.diagrams) {
      std::istringstream d(diagram);
      std::string line;
      while (std::getline(d, line)) text << "       " << line << "\n";
    }
    ++idx;
  }
  std::string footer = std::to_string(ideals.size()) + " total, " + std::to_string(n_rs) + " rationally smooth, " +
                       std::to_string(n_s) + " smooth, " + std::to_string(n_u) + " unitary";
  if (o.format == "json") {
    json payload{{"elements", rows},
                 {"counts", {{"total", ideals.size()}, {"rationally_smooth", n_rs}, {"smooth", n_s}, {"unitary", n_u}}},
                 {"footer", footer}};
    out << envelope(pair->name(), payload).dump(2) << "\n";
  } else {
    out << pair->name() << "  (U unitary, S smooth, R rationally smooth)\n" << text.str() << footer << "\n";
  }
  return ok;
}

inline void print_report(const UnitarityReport& r, bool verbose, std::ostream& out) {
  out << "pair: " << r.pair << "\n";
  out << "x: " << (r.x_word.empty() ? "e" : r.x_word) << "  (length " << r.length << ")\n";
  out << "w = w_c x: " << (r.w_word.empty() ? "e" : r.w_word) << "\n";
  out << "unitary: " << yesno(r.is_unitary);
  if (r.is_unitary) out << "  subdiagram " << set_str(r.subdiagram);
  out << "\n";
  out << "smooth: " << yesno(r.smooth) << "\n";
  out << "rationally smooth: " << yesno(r.rationally_smooth) << "\n";
  out << "lambda: " << format_fundamental(r.lambda_fundamental) << "\n";
  out << "lambda (ambient): " << Weight(r.lambda).str() << "\n";
  out << "k index: " << (r.k_index ? std::to_string(*r.k_index) : "n/a")
      << "  GK dimension: " << (r.gk_dim ? to_string(*r.gk_dim) : "n/a") << "\n";
  out << "Poincare polynomial: " << r.poincare << "\n";
  if (verbose) {
    out << "z: " << to_string(r.z) << "  b: " << to_string(r.b_last) << "\n";
    out << "Q: " << r.q_type << "  R: " << r.r_type << "\n";
  }
  out << "diagram:\n" << r.diagram << (r.diagram.empty() || r.diagram.back() == '\n' ? "" : "\n");
}

inline int negative_outcome(const Options& o, const std::string& pair, const std::string& what,
                            const std::string& detail, std::ostream& out) {
  if (o.format == "json") out << envelope(pair, {{"outcome", what}, {"detail", detail}}).dump(2) << "\n";
  else out << what << ": " << detail << "\n";
  return negative;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  auto pair = pair_from_name(o.pair);
  WeylElement g = from_word(pair->system(), parse_word(o.word));
  WeylElement x = g;
  if (o.element == "w") {
    auto d = decompose_hwhc(*pair, g);
    if (!d) return negative_outcome(o, pair->name(), "NotHwhc", "w is not of the form w_c x with x in kW", out);
    x = d->x;
  } else if (o.element != "x") {
    throw Error(errc::parse_error, "--element must be w or x");
  }
  if (!is_minimal_coset_rep(x, *pair))
    return negative_outcome(o, pair->name(), "NotMinimalCosetRep", "x is not a minimal length coset representative", out);
  auto r = make_report(pair, x);
  if (o.format == "json") out << envelope(pair->name(), r).dump(2) << "\n";
  else print_report(r, o.verbose, out);
  return ok;
}

inline int cmd_nk(const Options& o, std::ostream& out) {
  auto pair = pair_from_name(o.pair);
  auto census = nk_census(pair);
  json rows = json::array();
  std::ostringstream text;
  int sum = 0;
  for (int k = 0; k <= pair->constants().r; ++k) {
    int f = nk_closed_form(*pair, k), s = nk_from_subdiagrams(*pair, k);
    if (f != census[k] || s != census[k])
      throw Error(errc::internal_inconsistency, "N_" + std::to_string(k) + " disagrees: closed form " +
                                                    std::to_string(f) + ", subdiagrams " + std::to_string(s) +
                                                    ", census " + std::to_string(census[k]));
    rows.push_back({{"k", k}, {"N", census[k]}});
    text << "k=" << k << "  N=" << census[k] << "\n";
    sum += census[k];
  }
  if (o.format == "json") out << envelope(pair->name(), {{"rows", rows}, {"total", sum}}).dump(2) << "\n";
  else out << pair->name() << "\n" << text.str() << "total " << sum << "\n";
  return ok;
}

inline int cmd_diagram(const Options& o, std::ostream& out) {
  auto pair = pair_from_name(o.pair);
  WeylElement x = from_word(pair->system(), parse_word(o.word));
  if (!is_minimal_coset_rep(x, *pair))
    return negative_outcome(o, pair->name(), "NotMinimalCosetRep", "x is not a minimal length coset representative", out);
  auto d = render_diagram(element_to_ideal(pair, x));
  if (o.format == "json") {
    json cells = json::array();
    for (std::size_t i = 0; i < d.cells.size(); ++i)
      cells.push_back({{"row", d.cells[i].row}, {"col", d.cells[i].col}, {"label", d.labels[i]}});
    out << envelope(pair->name(), {{"cells", cells}, {"word", format_word(d.linearization)}, {"text", d.text}}).dump(2)
        << "\n";
  } else {
    out << d.text << (d.text.back() == '\n' ? "" : "\n");
  }
  return ok;
}

// Entry point shared by the executable and the tests; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Highest weight Harish-Chandra modules of Hermitian symmetric pairs"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool needs_pair) {
    auto* p = sub->add_option("--pair", o.pair, "pair name, e.g. su(3,2), sp(3,R), so*(8), so(2,7), e6(-14), e7(-25)");
    if (needs_pair) p->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verbose", o.verbose, "show reduction-point data in text mode");
  };
  auto* cat = app.add_subcommand("catalog", "constants r, c, h∨ for the seven families");
  add_common(cat, false);
  auto* en = app.add_subcommand("enumerate", "list every element of kW with its classification");
  add_common(en, true);
  en->add_flag("--diagrams", o.diagrams, "draw the generalized Young diagram of each element");
  auto* ch = app.add_subcommand("check", "full report for one element");
  add_common(ch, true);
  ch->add_option("--word", o.word, "comma separated simple reflections, 1-based")->required();
  ch->add_option("--element", o.element, "interpret the word as w or as x")->check(CLI::IsMember({"w", "x"}));
  auto* nk = app.add_subcommand("nk", "unitary modules per cell index k");
  add_common(nk, true);
  auto* dg = app.add_subcommand("diagram", "generalized Young diagram of x");
  add_common(dg, true);
  dg->add_option("--word", o.word, "comma separated simple reflections, 1-based")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return failure;
  }

  try {
    if (!o.pair.empty()) {
      auto p = pair_from_name(o.pair);
      if (!p->note().empty()) err << "warning: " << p->note() << "\n";
    }
    if (cat->parsed()) return cmd_catalog(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (ch->parsed()) return cmd_check(o, out);
    if (nk->parsed()) return cmd_nk(o, out);
    if (dg->parsed()) return cmd_diagram(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}

}  // namespace hhcw::cli
