#include "cli.hpp"

#include "wmgroups/coset_table.hpp"
#include "wmgroups/dsl.hpp"
#include "wmgroups/magnus.hpp"
#include "wmgroups/presentation.hpp"
#include "wmgroups/properties.hpp"
#include "wmgroups/wm_report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

namespace wmcli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::uint64_t seed = 1;
  bool json_out = false;
  std::uint32_t depth = 0;  // 0 keeps the library defaults
  std::uint32_t max_index = 5;
};

wm::Limits limits_for(const Config& cfg) {
  wm::Limits l;
  if (cfg.depth > 0) {
    l.tower_depth = cfg.depth;
    l.theta_level = cfg.depth;
    l.wreath_level = cfg.depth;
    l.desc_depth = std::max<std::uint32_t>(l.desc_depth, 4 * cfg.depth + 8);
  }
  return l;
}

json integer_json(const wm::Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

json matrix_json(const wm::IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wm::PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// .qmap: {"rank": 2, "kind": "finite" | "altfin", "targets": ["(1 2)", "(1 2)"]}
wm::QuotientMap read_qmap(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw wm::ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("targets") || !j["targets"].is_array())
    throw wm::PreconditionError(path + ": expected an object with a \"targets\" array");
  std::vector<wm::Permutation> images;
  for (const auto& t : j["targets"]) {
    if (!t.is_string()) throw wm::PreconditionError(path + ": targets must be cycle strings");
    images.push_back(wm::Permutation::parse(t.get<std::string>()));
  }
  if (j.contains("rank") && j["rank"].get<std::size_t>() != images.size())
    throw wm::PreconditionError(path + ": rank does not match the number of targets");
  const std::string kind = j.value("kind", std::string("finite"));
  if (kind == "altfin") return wm::QuotientMap::altfin(std::move(images));
  if (kind != "finite") throw wm::PreconditionError(path + ": unknown kind '" + kind + "'");
  return wm::QuotientMap::finite(std::move(images));
}

wm::QuotientMap load_quotient(const std::string& quotient_text, const std::string& qmap, std::uint32_t rank) {
  if (quotient_text.empty() == qmap.empty()) throw wm::PreconditionError("give exactly one of --quotient and --qmap");
  wm::QuotientMap pi = qmap.empty() ? wm::QuotientMap::parse(quotient_text) : read_qmap(qmap);
  if (rank != 0 && pi.rank() != rank)
    throw wm::PreconditionError("--rank " + std::to_string(rank) + " but the quotient has rank " +
                                std::to_string(pi.rank()));
  return pi;
}

std::string order_name(wm::Order o) {
  return o == wm::Order::Less ? "less" : o == wm::Order::Equal ? "equal" : "greater";
}

std::string sign_name(const wm::GroupDesc& g, const wm::Element& x) {
  if (wm::is_identity(g, x)) return "identity";
  return wm::is_positive(g, x) ? "positive" : "negative";
}

// ---------------------------------------------------------------------------

int cmd_eval(const Config& cfg, const std::string& group, const std::vector<std::string>& exprs, std::ostream& out) {
  const wm::Group g = wm::parse_group(group, limits_for(cfg));
  json records = json::array();
  for (const auto& e : exprs) {
    const wm::Element x = wm::parse_element(*g, e);
    const std::string value = wm::format_element(*g, x);
    if (cfg.json_out)
      records.push_back({{"group", g->name()}, {"input", e}, {"value", value}});
    else
      out << value << "\n";
  }
  if (cfg.json_out) out << records.dump(2) << "\n";
  return 0;
}

int cmd_cmp(const Config& cfg, const std::string& group, const std::string& a, const std::string& b, std::ostream& out) {
  const wm::Group g = wm::parse_group(group, limits_for(cfg));
  const wm::Element x = wm::parse_element(*g, a), y = wm::parse_element(*g, b);
  const bool equal = wm::eq(*g, x, y);
  std::string order = "none";
  if (g->order_capable()) order = order_name(wm::compare(*g, x, y));
  if (cfg.json_out) {
    out << json{{"group", g->name()},
                {"a", wm::format_element(*g, x)},
                {"b", wm::format_element(*g, y)},
                {"equal", equal},
                {"order", order}}
               .dump(2)
        << "\n";
  } else {
    out << (equal ? "equal" : "not equal");
    if (g->order_capable()) out << " (" << order << ")";
    out << "\n";
  }
  return 0;
}

int cmd_witness_commutator(const Config& cfg, const std::string& group, const std::string& expr, std::ostream& out) {
  const wm::Group g = wm::parse_group(group, limits_for(cfg));
  const wm::Element x = wm::parse_element(*g, expr);
  if (g->kind() != wm::GroupKind::Tower && g->kind() != wm::GroupKind::Lamp)
    throw wm::CapabilityError("commutator witnesses need a tower(G) or lamp(G) group");
  const auto [f, s, target] = [&]() -> std::tuple<wm::Element, wm::Element, wm::Element> {
    if (g->kind() == wm::GroupKind::Tower) {
      auto [f0, s0] = wm::perfectness_witness(*g, x);
      return {f0, s0, wm::is_identity(*g, x) ? x : wm::tower_lift(*g, x)};
    }
    auto v = wm::lamp_delta_value(*g, x);
    if (!v) {
      if (!wm::is_identity(*g, x)) throw wm::PreconditionError("element is not delta(g) for any g");
      v = wm::identity(g->base());
    }
    return {wm::make_fg(*g, *v), wm::make_sigma(*g), x};
  }();
  const bool verified = wm::eq(*g, wm::commutator(*g, f, s), target);
  if (!verified) throw wm::InvariantError("commutator witness failed to verify");
  if (cfg.json_out) {
    out << json{{"group", g->name()},
                {"element", wm::format_element(*g, x)},
                {"f", wm::format_element(*g, f)},
                {"s", wm::format_element(*g, s)},
                {"commutator", wm::format_element(*g, target)},
                {"verified", verified}}
               .dump(2)
        << "\n";
  } else {
    out << "f = " << wm::format_element(*g, f) << "\n"
        << "s = " << wm::format_element(*g, s) << "\n"
        << "[f, s] = " << wm::format_element(*g, target) << " (verified)\n";
  }
  return 0;
}

int cmd_witness_normal_closure(const Config& cfg, const std::string& group, const std::string& xs,
                               const std::string& ys, const std::string& bs, std::ostream& out) {
  const wm::Group g = wm::parse_group(group, limits_for(cfg));
  if (g->kind() != wm::GroupKind::RestrictedWreath && g->kind() != wm::GroupKind::Theta)
    throw wm::CapabilityError("normal closure witnesses need a wr(A, B) or theta(A) group");
  const bool wreath = g->kind() == wm::GroupKind::RestrictedWreath;
  const wm::GroupDesc& inner = wreath ? g->base() : g->abar();
  const wm::Element x = wm::parse_element(inner, xs);
  const wm::Element y = wm::parse_element(inner, ys);
  const wm::Element bx = wm::parse_element(wreath ? g->top() : g->abar(), bs);
  const wm::ConjugateWord word =
      wreath ? wm::normal_closure_witness(*g, x, y, bx) : wm::theta_normal_closure_witness(*g, bx, x, y);
  const wm::Element b = wreath ? wm::rw_embed_top(*g, bx) : wm::Element(wm::c_from_w(*g, wm::WElement{0, bx}));
  json terms = json::array();
  for (const auto& [u, eps] : word.terms) terms.push_back({{"u", wm::format_element(*g, u)}, {"exponent", eps}});
  if (cfg.json_out) {
    out << json{{"group", g->name()},
                {"x", wm::format_element(inner, x)},
                {"y", wm::format_element(inner, y)},
                {"b", wm::format_element(*g, b)},
                {"terms", terms},
                {"verified", true}}
               .dump(2)
        << "\n";
  } else {
    out << "b = " << wm::format_element(*g, b) << "\n";
    out << "[x, y] = product of u b^e u^-1 over:\n";
    for (const auto& [u, eps] : word.terms)
      out << "  " << wm::format_element(*g, u) << " \u25B7 b^" << eps << "\n";
    out << "verified\n";
  }
  return 0;
}

int cmd_crysta(std::uint32_t rank, const std::string& quotient_text, const std::string& qmap,
               std::ostream& out) {
  const wm::QuotientMap pi = load_quotient(quotient_text, qmap, rank);
  const auto rep = wm::crystallographic_report(pi);
  json hol = json::array();
  for (const auto& h : rep.holonomy) hol.push_back(matrix_json(h));
  out << json{{"order", rep.order},
              {"rank", rep.rank},
              {"faithful", rep.faithful},
              {"verdict", rep.verdict},
              {"degenerate", rep.degenerate},
              {"holonomy", hol}}
             .dump(2)
      << "\n";
  return 0;
}

int cmd_fox(const Config& cfg, std::uint32_t rank, const std::string& quotient_text, const std::string& qmap,
            const std::string& word_text, std::uint64_t p, std::ostream& out) {
  const wm::QuotientMap pi = load_quotient(quotient_text, qmap, rank);
  const wm::FreeWord w = wm::parse_free_word(word_text, pi.rank());
  const wm::MagnusElement m = wm::magnus_image(w, pi);
  const bool nprime = m.is_identity();
  const bool fprime = wm::in_Fprime(w);
  std::optional<wm::ModPQuotient> modp;
  if (p != 0) modp.emplace(pi, p);
  if (cfg.json_out) {
    json fox = json::array();
    for (const auto& d : m.v) fox.push_back(d.to_string(pi));
    json j{{"word", w.to_string()}, {"q", pi.element_name(m.q)}, {"fox", fox}, {"in_Nprime", nprime}, {"in_Fprime", fprime}};
    if (modp) {
      j["mod_p"] = {{"p", p}, {"order", integer_json(modp->order())}, {"image", modp->image(w).to_string(pi)},
                    {"trivial", modp->image(w).is_identity()}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "image: " << m.to_string(pi) << "\n";
    for (std::uint32_t i = 0; i < pi.rank(); ++i)
      out << "d/dx" << (i + 1) << ": " << m.v[i].to_string(pi) << "\n";
    out << "in N': " << (nprime ? "yes" : "no") << "\n";
    out << "in F': " << (fprime ? "yes" : "no") << "\n";
    if (modp) {
      const auto img = modp->image(w);
      out << "mod " << p << " image: " << img.to_string(pi) << (img.is_identity() ? " (trivial)" : " (nontrivial)")
          << " in a group of order " << modp->order().str() << "\n";
    }
  }
  return 0;
}

int print_results(const Config& cfg, const std::vector<wm::props::PropertyResult>& results, std::ostream& out) {
  std::size_t failed = 0;
  json arr = json::array();
  for (const auto& r : results) {
    if (!r.ok()) ++failed;
    if (cfg.json_out) {
      json j{{"name", r.name}, {"samples", r.samples}, {"failures", r.failures}, {"pass", r.ok()}};
      if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
      arr.push_back(std::move(j));
    } else {
      out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.samples << " checks, " << r.failures << " failures)";
      if (!r.first_failure.empty()) out << ": " << r.first_failure;
      out << "\n";
    }
  }
  if (cfg.json_out)
    out << json{{"suites", arr}, {"passed", results.size() - failed}, {"failed", failed}}.dump(2) << "\n";
  else
    out << (results.size() - failed) << " passed, " << failed << " failed\n";
  return failed ? 2 : 0;
}

int cmd_order_check(const Config& cfg, const std::string& group, const std::vector<std::string>& exprs,
                    std::size_t samples, std::uint64_t bound, std::ostream& out) {
  const wm::Group g = wm::parse_group(group, limits_for(cfg));
  if (exprs.empty()) {
    std::vector<wm::props::PropertyResult> results;
    if (g->order_capable()) results.push_back(wm::props::order_cone(*g, cfg.seed, samples));
    results.push_back(wm::props::torsion_free(*g, cfg.seed + 1, samples, bound));
    return print_results(cfg, results, out);
  }
  json arr = json::array();
  for (const auto& e : exprs) {
    const wm::Element x = wm::parse_element(*g, e);
    const auto o = wm::order_of_element(*g, x, bound);
    const std::string sign = g->order_capable() ? sign_name(*g, x) : "unordered";
    if (cfg.json_out) {
      json j{{"element", wm::format_element(*g, x)}, {"sign", sign}};
      j["order"] = o ? json(*o) : json(nullptr);
      j["bound"] = bound;
      arr.push_back(std::move(j));
    } else {
      out << wm::format_element(*g, x) << ": " << sign << ", ";
      if (o)
        out << "order " << *o << "\n";
      else
        out << "no order <= " << bound << "\n";
    }
  }
  if (cfg.json_out) out << arr.dump(2) << "\n";
  return 0;
}

int cmd_wm_report(const Config& cfg, const std::string& file, const std::string& text, std::ostream& out) {
  if (file.empty() == text.empty()) throw wm::PreconditionError("give a presentation file or --text");
  const wm::Presentation p = wm::parse_presentation(file.empty() ? text : read_file(file));
  const wm::WmReport rep = wm::wm_necessary_report(p, cfg.max_index);
  if (cfg.json_out) {
    json ab = json::array();
    for (const auto& d : rep.abelianization) ab.push_back(integer_json(d));
    json j{{"presentation", p.to_string()},
           {"max_index", rep.max_index},
           {"abelianization", ab},
           {"abelianization_trivial", rep.abelianization_trivial},
           {"no_subgroups_up_to_index", rep.no_low_index_subgroups},
           {"subgroups_found", rep.subgroups_found},
           {"search_partial", rep.search_partial},
           {"verdict", rep.verdict_text()}};
    j["witness"] = rep.witness.empty() ? json(nullptr) : json(rep.witness);
    if (rep.witness_subgroup) {
      json gens = json::array();
      for (const auto& w : wm::subgroup_generators(rep.witness_subgroup->table)) gens.push_back(w.to_string(p.generators));
      j["witness_subgroup"] = {{"index", rep.witness_subgroup->table.index()},
                               {"generators", gens},
                               {"coset_table", rep.witness_subgroup->table.rows}};
    }
    j["disclaimer"] = wm::wm_report_disclaimer;
    out << j.dump(2) << "\n";
  } else {
    out << "presentation: " << p.to_string() << "\n";
    out << "abelianization: "
        << (rep.abelianization_trivial ? std::string("trivial") : wm::invariant_factors_string(rep.abelianization))
        << "\n";
    out << "subgroups of index 2.." << rep.max_index << ": "
        << (rep.search_partial ? "search incomplete"
                               : rep.subgroups_found ? std::to_string(rep.subgroups_found) + " conjugacy classes"
                                                     : std::string("none"))
        << "\n";
    out << "verdict: " << rep.verdict_text() << "\n";
    if (!rep.witness.empty()) {
      out << "witness: " << rep.witness;
      if (rep.witness_subgroup) {
        out << " generated by";
        const auto gens = wm::subgroup_generators(rep.witness_subgroup->table);
        for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : " ") << gens[i].to_string(p.generators);
      }
      out << "\n";
    }
    out << "note: " << wm::wm_report_disclaimer << "\n";
  }
  return rep.exit_code();
}

int cmd_selftest(const Config& cfg, std::size_t samples, std::ostream& out) {
  return print_results(cfg, wm::props::run_all(cfg.seed, samples), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for wreath, HNN and metabelian group constructions", "wmgroups"};
  app.fallthrough();
  app.require_subcommand(1);
  app.allow_extras();
  Config cfg;
  app.add_option("--seed", cfg.seed, "Random seed for sampled checks");
  app.add_flag("--json", cfg.json_out, "Machine-readable output");
  app.add_option("--depth", cfg.depth, "Nesting bound for tower levels, theta levels and W levels")
      ->check(CLI::Range(1u, 32u));
  app.add_option("--max-index", cfg.max_index, "Largest subgroup index searched by wm-report")
      ->check(CLI::Range(2u, 12u));

  std::string group;
  std::vector<std::string> exprs;
  auto* eval = app.add_subcommand("eval", "Evaluate element expressions in a group");
  eval->add_option("--group,-g", group, "Group, e.g. lamp(Z)")->required();
  // Leftover arguments, so "[a, b]" stays one expression.
  eval->allow_extras();
  eval->footer("Arguments: one or more element expressions");

  std::string a_text, b_text;
  auto* cmp = app.add_subcommand("cmp", "Compare two elements");
  cmp->add_option("--group,-g", group)->required();
  cmp->add_option("a", a_text)->required();
  cmp->add_option("b", b_text)->required();

  auto* witness = app.add_subcommand("witness", "Commutator and normal closure witnesses");
  witness->require_subcommand(1);
  std::string elem_text;
  auto* wcomm = witness->add_subcommand("commutator", "x = [f, s] in tower(G), or delta(g) = [fg(g), sigma] in lamp(G)");
  wcomm->add_option("--group,-g", group)->required();
  wcomm->add_option("element", elem_text)->required();
  std::string x_text, y_text, by_text;
  auto* wnc = witness->add_subcommand("normal-closure", "[x, y] as a product of conjugates of b");
  wnc->add_option("--group,-g", group)->required();
  wnc->add_option("--x", x_text, "x in A (wr) or lamp(A) (theta)")->required();
  wnc->add_option("--y", y_text, "y in A (wr) or lamp(A) (theta)")->required();
  wnc->add_option("--b", by_text, "b != 1 in B (wr) or in lamp(A) (theta)")->required();

  std::uint32_t rank = 0;
  std::string quotient, qmap;
  auto* crysta = app.add_subcommand("crysta", "Fiber lattice and crystallographic report for F/N'");
  crysta->add_option("--rank", rank, "Rank of the free group");
  crysta->add_option("--quotient", quotient, "Quotient, e.g. \"Z/2: x->s, y->s\"");
  crysta->add_option("--qmap", qmap, "Quotient map JSON file");

  std::string wm_file, wm_text;
  auto* wmr = app.add_subcommand("wm-report", "Bounded WM necessary-condition report for a presentation");
  wmr->add_option("file", wm_file, "Presentation file (.pres)");
  wmr->add_option("--text", wm_text, "Presentation given inline");

  std::string word_text;
  std::uint64_t prime = 0;
  auto* fox = app.add_subcommand("fox", "Fox derivatives and Magnus image of a free word");
  fox->add_option("--rank", rank);
  fox->add_option("--quotient", quotient);
  fox->add_option("--qmap", qmap);
  fox->add_option("--mod-p", prime, "Also reduce into the mod-p finite quotient");
  fox->add_option("word", word_text, "Word, e.g. \"[x,y]\" or \"x1 x2^-1\"")->required();

  std::size_t samples = 200;
  std::uint64_t bound = 10;
  auto* order = app.add_subcommand("order-check", "Signs and small orders of elements, or sampled cone checks");
  order->add_option("--group,-g", group)->required();
  order->add_option("--samples", samples, "Samples when no elements are given");
  order->add_option("--bound", bound, "Largest order searched")->check(CLI::Range(1u, 10000u));
  order->allow_extras();
  order->footer("Arguments: elements to examine (none: run sampled cone and torsion checks)");

  auto* selftest = app.add_subcommand("selftest", "Run every property suite");
  selftest->add_option("--samples", samples, "Samples per randomized property");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  const auto leftovers = [&app](const CLI::App* sub) {
    std::vector<std::string> v = sub ? sub->remaining() : std::vector<std::string>{};
    const auto top = app.remaining();
    v.insert(v.end(), top.begin(), top.end());
    for (const auto& a : v)
      if (a.size() > 1 && a[0] == '-' && !std::isdigit(static_cast<unsigned char>(a[1])))
        throw wm::PreconditionError("unknown option " + a);
    return v;
  };

  try {
    exprs = leftovers(*eval ? eval : *order ? order : nullptr);
    if (!*eval && !*order && !exprs.empty()) throw wm::PreconditionError("unexpected argument " + exprs.front());
    if (*eval && exprs.empty()) throw wm::PreconditionError("eval needs at least one expression");
    if (*eval) return cmd_eval(cfg, group, exprs, out);
    if (*cmp) return cmd_cmp(cfg, group, a_text, b_text, out);
    if (*wcomm) return cmd_witness_commutator(cfg, group, elem_text, out);
    if (*wnc) return cmd_witness_normal_closure(cfg, group, x_text, y_text, by_text, out);
    if (*crysta) return cmd_crysta(rank, quotient, qmap, out);
    if (*wmr) return cmd_wm_report(cfg, wm_file, wm_text, out);
    if (*fox) return cmd_fox(cfg, rank, quotient, qmap, word_text, prime, out);
    if (*order) return cmd_order_check(cfg, group, exprs, samples, bound, out);
    if (*selftest) return cmd_selftest(cfg, samples, out);
  } catch (const wm::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace wmcli
