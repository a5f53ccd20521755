#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "novk/dtc.hpp"
#include "novk/fixtures.hpp"
#include "novk/laurent.hpp"
#include "novk/novhom.hpp"
#include "novk/report.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) novk::fail(novk::ErrKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct GroupContext {
  novk::Presentation pres;
  std::shared_ptr<const novk::FiniteGroupTable> table;
};

GroupContext realize(const std::string& pres_path, size_t max_cosets) {
  GroupContext ctx;
  ctx.pres = novk::parse_presentation(slurp(pres_path));
  ctx.table = std::make_shared<const novk::FiniteGroupTable>(novk::todd_coxeter(ctx.pres, max_cosets));
  return ctx;
}

novk::CoefficientRing parse_ring(const std::string& s) {
  if (s == "Z") return novk::CoefficientRing::integers();
  if (s == "Q") return novk::CoefficientRing::rationals();
  if (s.rfind("Z/", 0) == 0) return novk::CoefficientRing::integers_mod(novk::Int(s.substr(2)));
  novk::fail(novk::ErrKind::InvalidArgument, "ring must be Z, Q or Z/n, got '" + s + "'");
}

std::string series_text(const novk::LaurentSeries& s) {
  return novk::to_string(s) + " (trunc " + std::to_string(s.truncation()) + ")";
}

json series_json(const novk::LaurentSeries& s) {
  return json{{"series", novk::to_string(s)},
              {"truncation", s.truncation()},
              {"ring", s.ring().to_string()}};
}

json abelian_json(const novk::AbelianGroup& g) {
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(d.str());
  return json{{"rank", g.rank}, {"torsion", t}};
}

json bound_json(const novk::BoundReport& b) {
  json j{{"lower", b.lower}, {"certificates", b.certificates}};
  if (b.upper)
    j["upper"] = *b.upper;
  else
    j["upper"] = nullptr;
  return j;
}

void emit_bounds(const novk::BoundReport& b, const std::string& name, bool as_json) {
  if (as_json) {
    std::cout << bound_json(b).dump(2) << "\n";
    return;
  }
  std::cout << novk::to_string(b, name) << "\n";
  for (const auto& c : b.certificates) std::cout << "  - " << c << "\n";
}

// parse repeatable "id=<product word>" generator definitions
std::vector<novk::DtcGenerator> parse_generators(const std::vector<std::string>& defs,
                                                 const std::vector<std::string>& heights,
                                                 const GroupContext& ctx) {
  std::vector<novk::DtcGenerator> gens;
  for (const auto& def : defs) {
    auto eq = def.find('=');
    if (eq == std::string::npos)
      novk::fail(novk::ErrKind::ParseError, "--gen expects id=WORD, got '" + def + "'");
    std::string id = def.substr(0, eq);
    auto word = novk::parse_product_word(def.substr(eq + 1), ctx.pres, ctx.table);
    std::optional<int> h;
    for (const auto& hdef : heights) {
      auto heq = hdef.find('=');
      if (heq == std::string::npos)
        novk::fail(novk::ErrKind::ParseError, "--height expects id=h, got '" + hdef + "'");
      if (hdef.substr(0, heq) == id) h = std::stoi(hdef.substr(heq + 1));
    }
    gens.emplace_back(id, std::move(word), h);
  }
  return gens;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"novk: Novikov fundamental group workbench"};
  app.require_subcommand(1);
  app.fallthrough(); // lets --json appear after the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  // shared option storage
  std::string pres_path, complex_path, window_text = "0:2", ring_text = "Z";
  size_t max_cosets = 10000, max_len = 4, cap = 8, depth = 1;
  std::vector<int> truncs;
  int trunc_to = 0, at_level = 0, shift_by = 0, degree = 1, dim_n = 7;
  long long exponent = 1;
  std::vector<std::string> gen_defs, gen_heights, rel_texts;
  std::string gens_csv;
  std::string arg1, arg2; // literal positionals (plain strings: CLI11 would
                          // strip the enclosing brackets from vector values)

  auto add_pres = [&](CLI::App* cmd) {
    cmd->add_option("-f,--file", pres_path, "presentation file")->required();
    cmd->add_option("--max-cosets", max_cosets, "coset limit for enumeration");
  };

  // ---- group -------------------------------------------------------------
  auto* group = app.add_subcommand("group", "finitely presented group operations");
  group->require_subcommand(1);
  std::function<void()> action;

  auto* g_enum = group->add_subcommand("enumerate", "coset enumeration to a finite table");
  add_pres(g_enum);
  g_enum->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    if (as_json)
      std::cout << json{{"order", ctx.table->order()}}.dump(2) << "\n";
    else
      std::cout << "order " << ctx.table->order() << "\n";
  });

  auto* g_ab = group->add_subcommand("abelianize", "abelianization via Smith normal form");
  g_ab->add_option("-f,--file", pres_path, "presentation file")->required();
  g_ab->callback([&] {
    auto p = novk::parse_presentation(slurp(pres_path));
    auto ab = novk::abelianization(p);
    if (as_json)
      std::cout << abelian_json(ab).dump(2) << "\n";
    else
      std::cout << novk::to_string(ab) << "\n";
  });

  auto* g_cyc = group->add_subcommand("is-cyclic", "test whether the realized group is cyclic");
  add_pres(g_cyc);
  g_cyc->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    bool c = novk::is_cyclic(*ctx.table);
    if (as_json)
      std::cout << json{{"cyclic", c}}.dump(2) << "\n";
    else
      std::cout << (c ? "true" : "false") << "\n";
  });

  auto* g_dim = group->add_subcommand("dim-hom", "dimension of Hom(G, R)");
  g_dim->add_option("-f,--file", pres_path, "presentation file")->required();
  g_dim->callback([&] {
    auto p = novk::parse_presentation(slurp(pres_path));
    size_t d = novk::dim_hom_r(p);
    if (as_json)
      std::cout << json{{"dim_hom_R", d}}.dump(2) << "\n";
    else
      std::cout << d << "\n";
  });

  auto* g_min = group->add_subcommand("min-gens", "minimal number of generators (exhaustive)");
  add_pres(g_min);
  g_min->add_option("--cap", cap, "largest tuple size to try");
  g_min->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    size_t m = novk::min_generators(*ctx.table, cap);
    if (as_json)
      std::cout << json{{"min_generators", m}, {"cap", cap}}.dump(2) << "\n";
    else
      std::cout << m << "\n";
  });

  // ---- word --------------------------------------------------------------
  auto* word = app.add_subcommand("word", "free-product word operations");
  word->require_subcommand(1);

  auto word_cmd = [&](const std::string& name, const std::string& help, size_t nwords) {
    auto* cmd = word->add_subcommand(name, help);
    add_pres(cmd);
    cmd->add_option("word", arg1, "word literal like [0:a][1:b^-1]")->required();
    if (nwords == 2) cmd->add_option("word2", arg2, "second word literal")->required();
    return cmd;
  };
  auto print_word = [&](const novk::ProductWord& w, const GroupContext& ctx) {
    if (as_json)
      std::cout << json{{"word", novk::to_string(w, ctx.pres)}}.dump(2) << "\n";
    else
      std::cout << novk::to_string(w, ctx.pres) << "\n";
  };

  word_cmd("reduce", "normal form of a raw word", 1)->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    print_word(novk::parse_product_word(arg1, ctx.pres, ctx.table), ctx);
  });
  word_cmd("mul", "product of two words", 2)->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    print_word(novk::mul(novk::parse_product_word(arg1, ctx.pres, ctx.table),
                         novk::parse_product_word(arg2, ctx.pres, ctx.table)),
               ctx);
  });
  word_cmd("inv", "inverse of a word", 1)->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    print_word(novk::inv(novk::parse_product_word(arg1, ctx.pres, ctx.table)), ctx);
  });
  {
    auto* cmd = word_cmd("shift", "translate all levels", 1);
    cmd->add_option("--by", shift_by, "level translation")->required();
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      print_word(novk::shift(novk::parse_product_word(arg1, ctx.pres, ctx.table), shift_by), ctx);
    });
  }
  {
    auto* cmd = word_cmd("zip", "kill all letters below a level", 1);
    cmd->add_option("--at", at_level, "target level h")->required();
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      print_word(novk::zip(novk::parse_product_word(arg1, ctx.pres, ctx.table), at_level), ctx);
    });
  }
  word_cmd("height", "maximal letter level", 1)->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    auto h = novk::height(novk::parse_product_word(arg1, ctx.pres, ctx.table));
    if (as_json)
      std::cout << (h ? json{{"height", *h}} : json{{"height", nullptr}}).dump(2) << "\n";
    else
      std::cout << (h ? std::to_string(*h) : "-inf") << "\n";
  });
  {
    auto* cmd = word_cmd("power", "n-th power via cyclic reduction", 1);
    cmd->add_option("--exp", exponent, "exponent n")->required();
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      print_word(novk::power(novk::parse_product_word(arg1, ctx.pres, ctx.table), exponent), ctx);
    });
  }
  word_cmd("cyclic-reduce", "split off the maximal conjugator", 1)->callback([&] {
    auto ctx = realize(pres_path, max_cosets);
    auto [conj, core] = novk::cyclic_reduce(novk::parse_product_word(arg1, ctx.pres, ctx.table));
    if (as_json)
      std::cout << json{{"conjugator", novk::to_string(conj, ctx.pres)},
                        {"core", novk::to_string(core, ctx.pres)}}
                       .dump(2)
                << "\n";
    else
      std::cout << "conjugator: " << novk::to_string(conj, ctx.pres) << "\n"
                << "core: " << novk::to_string(core, ctx.pres) << "\n";
  });

  // ---- dtc ---------------------------------------------------------------
  auto* dtc = app.add_subcommand("dtc", "generators and relations up to deck transformations");
  dtc->require_subcommand(1);

  {
    auto* cmd = dtc->add_subcommand("eval", "evaluate a formal word in shifted generators");
    add_pres(cmd);
    cmd->add_option("--gen", gen_defs, "generator definition id=WORD")->required();
    cmd->add_option("--height", gen_heights, "assigned height id=h");
    cmd->add_option("--at", at_level, "evaluation level h");
    cmd->add_option("dtcword", arg1, "formal word like {0:g1^1}{-1:g1^2}")->required();
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      auto gens = parse_generators(gen_defs, gen_heights, ctx);
      auto w = novk::parse_dtc_word(arg1);
      print_word(novk::eval_dtc_word(w, gens, at_level), ctx);
    });
  }
  {
    auto* cmd = dtc->add_subcommand("span-member", "bounded search for a generating expression");
    add_pres(cmd);
    cmd->add_option("--gen", gen_defs, "generator definition id=WORD")->required();
    cmd->add_option("--height", gen_heights, "assigned height id=h");
    cmd->add_option("--at", at_level, "evaluation level h");
    cmd->add_option("--window", window_text, "shift window lo:hi");
    cmd->add_option("--max-len", max_len, "maximal witness length");
    cmd->add_option("target", arg1, "target word literal")->required();
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      auto gens = parse_generators(gen_defs, gen_heights, ctx);
      auto target = novk::parse_product_word(arg1, ctx.pres, ctx.table);
      auto res = novk::span_member_bounded(target, gens, at_level, novk::parse_window(window_text),
                                           max_len);
      if (as_json) {
        json j{{"member", res.found},
               {"exhausted", res.exhausted},
               {"states_explored", res.states_explored}};
        j["witness"] = res.witness ? json(novk::to_string(*res.witness)) : json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else if (res.found) {
        std::cout << "member: " << novk::to_string(*res.witness) << "\n";
      } else {
        std::cout << "unknown (" << (res.exhausted ? "search space exhausted" : "bounds reached")
                  << ")\n";
      }
    });
  }
  {
    auto* cmd = dtc->add_subcommand("mu-bounds", "bounds for the minimal number of generators");
    add_pres(cmd);
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      emit_bounds(novk::mu_dtc_bounds(*ctx.table), "mu_DTC", as_json);
    });
  }
  {
    auto* cmd = dtc->add_subcommand("rho-bounds", "bounds for the minimal number of relations");
    add_pres(cmd);
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      emit_bounds(novk::rho_dtc_bounds(ctx.pres, *ctx.table), "rho_DTC", as_json);
    });
  }
  auto parse_ids = [&]() {
    std::vector<std::string> ids;
    std::stringstream ss(gens_csv);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) ids.push_back(id);
    if (ids.empty()) novk::fail(novk::ErrKind::InvalidArgument, "--gens expects a comma list of ids");
    return ids;
  };
  {
    auto* cmd = dtc->add_subcommand("rho-matrix", "Laurent matrix of the relations");
    cmd->add_option("--gens", gens_csv, "generator ids, comma separated")->required();
    cmd->add_option("--rel", rel_texts, "relation {k:id^e}... (repeatable)");
    cmd->callback([&] {
      std::vector<novk::DtcWord> rels;
      for (const auto& r : rel_texts) rels.push_back(novk::parse_dtc_word(r));
      auto m = novk::build_rho_matrix(parse_ids(), rels);
      if (as_json) {
        json rows = json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
          json row = json::array();
          for (size_t j = 0; j < m.cols(); ++j) row.push_back(novk::to_string(m.at(i, j)));
          rows.push_back(row);
        }
        int truncation = m.rows() && m.cols() ? m.at(0, 0).truncation() : 0;
        std::cout << json{{"rows", m.rows()},
                          {"cols", m.cols()},
                          {"entries", rows},
                          {"truncation", truncation}}
                         .dump(2)
                  << "\n";
      } else {
        for (size_t i = 0; i < m.rows(); ++i) {
          std::cout << "[";
          for (size_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << " ; ";
            std::cout << novk::to_string(m.at(i, j));
          }
          std::cout << "]\n";
        }
        if (m.rows() == 0) std::cout << "[0 x " << m.cols() << " matrix]\n";
      }
    });
  }
  {
    auto* cmd = dtc->add_subcommand("l-dim", "dimension of the Laurent morphism space");
    cmd->add_option("--gens", gens_csv, "generator ids, comma separated")->required();
    cmd->add_option("--rel", rel_texts, "relation {k:id^e}... (repeatable)");
    cmd->callback([&] {
      std::vector<novk::DtcWord> rels;
      for (const auto& r : rel_texts) rels.push_back(novk::parse_dtc_word(r));
      size_t d = novk::l_lambda_dim(parse_ids(), rels);
      if (as_json)
        std::cout << json{{"l_lambda_dim", d}}.dump(2) << "\n";
      else
        std::cout << d << "\n";
    });
  }
  {
    auto* cmd = dtc->add_subcommand("refute-single",
                                    "bounded search for single-generator candidates");
    add_pres(cmd);
    cmd->add_option("--window", window_text, "candidate level window lo:hi");
    cmd->add_option("--max-len", max_len, "maximal candidate and witness length");
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      auto rep = novk::single_generator_refutation_search(ctx.table, novk::parse_window(window_text),
                                                          max_len);
      if (as_json) {
        json surv = json::array();
        for (const auto& w : rep.survivors) surv.push_back(novk::to_string(w, ctx.pres));
        std::cout << json{{"candidates", rep.candidates},
                          {"survivors", surv},
                          {"conclusive", rep.conclusive()}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "candidates: " << rep.candidates << ", survivors: " << rep.survivors.size()
                  << "\n";
        for (const auto& w : rep.survivors) std::cout << "  " << novk::to_string(w, ctx.pres) << "\n";
        std::cout << (rep.conclusive()
                          ? "no single generator within bounds (consistent with non-cyclic factor)"
                          : "inconclusive: surviving candidates listed above")
                  << "\n";
      }
    });
  }

  // ---- novikov -----------------------------------------------------------
  auto* novikov = app.add_subcommand("novikov", "homology and Laurent arithmetic");
  novikov->require_subcommand(1);

  {
    auto* cmd = novikov->add_subcommand("homology", "homology of a chain complex");
    cmd->add_option("--complex", complex_path, "chain complex JSON file")->required();
    cmd->add_option("--degree", degree, "homology degree")->required();
    cmd->callback([&] {
      auto cx = novk::parse_chain_complex_json(slurp(complex_path));
      auto h = novk::homology(cx, static_cast<size_t>(degree));
      if (as_json)
        std::cout << abelian_json(h).dump(2) << "\n";
      else
        std::cout << novk::to_string(h) << "\n";
    });
  }
  {
    auto* cmd = novikov->add_subcommand("hn-sum", "Novikov homology of a connected sum with T^n");
    cmd->add_option("--complex", complex_path, "chain complex JSON of X")->required();
    cmd->add_option("--degree", degree, "degree (0, 1 or 2)")->required();
    cmd->add_option("--dim", dim_n, "ambient dimension n")->required();
    cmd->callback([&] {
      auto cx = novk::parse_chain_complex_json(slurp(complex_path));
      auto m = novk::hn_connected_sum(cx, degree, dim_n);
      if (as_json)
        std::cout << json{{"degree", degree}, {"module", novk::to_string(m)},
                          {"free_rank", m.free_rank}}
                         .dump(2)
                  << "\n";
      else
        std::cout << novk::to_string(m) << "\n";
    });
  }

  auto* laurent = novikov->add_subcommand("laurent", "truncated Laurent series arithmetic");
  laurent->require_subcommand(1);
  auto laurent_cmd = [&](const std::string& name, const std::string& help, size_t nargs) {
    auto* cmd = laurent->add_subcommand(name, help);
    cmd->add_option("--ring", ring_text, "coefficient ring: Z, Q or Z/n");
    cmd->add_option("--trunc", truncs, "truncation degree(s), one per input or one for all");
    cmd->add_option("series", arg1, "series literal like 1 - t + 3*t^2")->required();
    if (nargs == 2) cmd->add_option("series2", arg2, "second series literal")->required();
    return cmd;
  };
  auto trunc_of = [&](size_t i) {
    if (truncs.empty()) return 4;
    return i < truncs.size() ? truncs[i] : truncs.back();
  };
  auto print_series = [&](const novk::LaurentSeries& s) {
    if (as_json)
      std::cout << series_json(s).dump(2) << "\n";
    else
      std::cout << series_text(s) << "\n";
  };
  laurent_cmd("mul", "product of two series", 2)->callback([&] {
    auto ring = parse_ring(ring_text);
    print_series(novk::mul(novk::parse_series(arg1, ring, trunc_of(0)),
                           novk::parse_series(arg2, ring, trunc_of(1))));
  });
  laurent_cmd("invert", "inverse of a unit-leading series", 1)->callback([&] {
    auto ring = parse_ring(ring_text);
    print_series(novk::invert(novk::parse_series(arg1, ring, trunc_of(0))));
  });
  {
    auto* cmd = laurent_cmd("truncate", "lower the truncation degree", 1);
    cmd->add_option("--to", trunc_to, "new truncation degree")->required();
    cmd->callback([&] {
      auto ring = parse_ring(ring_text);
      print_series(novk::truncate(novk::parse_series(arg1, ring, trunc_of(0)), trunc_to));
    });
  }

  // ---- hurewicz ----------------------------------------------------------
  auto* hur = app.add_subcommand("hurewicz", "window Hurewicz and pro-abelianization");
  hur->require_subcommand(1);

  {
    auto* cmd = hur->add_subcommand("map", "levelwise abelianized image of a word");
    add_pres(cmd);
    cmd->add_option("--window", window_text, "level window lo:hi");
    cmd->add_option("word", arg1, "word literal")->required();
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      novk::AbelianizationMap ab(ctx.pres);
      auto im = novk::hurewicz_map_word(novk::parse_product_word(arg1, ctx.pres, ctx.table), ab,
                                        novk::parse_window(window_text));
      if (as_json) {
        json levels = json::array();
        for (const auto& lvl : im.levels) {
          json v = json::array();
          for (const auto& c : lvl) v.push_back(c.str());
          levels.push_back(v);
        }
        std::cout << json{{"lo", im.lo}, {"hi", im.hi}, {"levels", levels}}.dump(2) << "\n";
      } else {
        std::cout << novk::to_string(im) << "\n";
      }
    });
  }
  {
    auto* cmd = hur->add_subcommand("pro-abelianize", "window system of abelianizations");
    add_pres(cmd);
    cmd->add_option("--window", window_text, "level window lo:hi");
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      auto w = novk::parse_window(window_text);
      auto sys = novk::pro_abelianize(*ctx.table, w);
      json levels = json::array();
      for (int h = w.lo; h <= w.hi; ++h) {
        auto snf = novk::smith_normal_form(sys.presentations[static_cast<size_t>(h - w.lo)]);
        novk::AbelianGroup g;
        g.rank = sys.presentations[static_cast<size_t>(h - w.lo)].cols - snf.rank();
        for (const auto& d : snf.d)
          if (d > 1) g.torsion.push_back(d);
        if (as_json)
          levels.push_back(json{{"level", h}, {"group", abelian_json(g)}});
        else
          std::cout << "level " << h << ": " << novk::to_string(g) << "\n";
      }
      if (as_json) std::cout << json{{"levels", levels}}.dump(2) << "\n";
    });
  }
  {
    auto* cmd = hur->add_subcommand("ml-check", "Mittag-Leffler image stabilization");
    add_pres(cmd);
    cmd->add_option("--window", window_text, "level window lo:hi");
    cmd->add_option("--depth", depth, "stabilization depth K");
    cmd->callback([&] {
      auto ctx = realize(pres_path, max_cosets);
      auto sys = novk::pro_abelianize(*ctx.table, novk::parse_window(window_text));
      auto rep = novk::ml_check(sys, depth);
      if (as_json)
        std::cout << json{{"stable", rep.stable}, {"notes", rep.notes}}.dump(2) << "\n";
      else {
        std::cout << "stable: " << (rep.stable ? "true" : "false") << "\n";
        for (const auto& n : rep.notes) std::cout << "  " << n << "\n";
      }
    });
  }

  // ---- report ------------------------------------------------------------
  auto* report = app.add_subcommand("report", "end-to-end bundled examples");
  report->require_subcommand(1);
  for (const std::string which : {"poincare", "rp4"}) {
    auto* cmd = report->add_subcommand(which, "full pipeline for the " + which + " example");
    cmd->callback([&, which] {
      auto r = novk::report_example(which);
      std::cout << (as_json ? novk::render_report_json(r) : novk::render_report_text(r));
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const novk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
