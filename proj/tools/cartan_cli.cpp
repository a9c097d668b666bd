#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>

#include "cartan/catalog.hpp"
#include "cartan/engine.hpp"
#include "cartan/error.hpp"
#include "cartan/index.hpp"
#include "cartan/survey.hpp"
#include "cartan/verify.hpp"

using namespace cartan;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kOutside = 2, kInconsistent = 3 };

std::string item_text(const PairItem& i) {
  std::string s = to_string(i.name) + " in ";
  for (std::size_t k = 0; k < i.targets.size(); ++k) s += (k ? "*#" : "#") + std::to_string(i.targets[k] + 1);
  return s;
}

json essential_json(const ReductivePair& p, const EssentialPart& e, bool bourbaki) {
  json items = json::array(), center = json::array();
  for (const auto& i : e.items) items.push_back(item_text(i));
  for (const auto& v : e.center.basis()) center.push_back(format_coweight(p, bourbaki ? to_bourbaki(p, v) : v));
  return json{{"items", items}, {"center", center}};
}

int compute(const std::string& text, bool as_json, bool bourbaki) {
  const ReductivePair p = parse_pair(text);
  const CartanResult r = cartan_space(p);
  const ScreenResult screen = screen_nontrivial_ssgp(p);
  json basis = json::array(), coords = json::array();
  for (const auto& v : r.space.basis()) {
    basis.push_back(format_weight(p, v, bourbaki));
    json c = json::array();
    for (const auto& q : bourbaki ? to_bourbaki(p, v) : v) c.push_back(to_string(q));
    coords.push_back(c);
  }
  const json ess = essential_json(p, r.essential_part, bourbaki);
  if (as_json) {
    json out{{"pair", to_string(p)},
             {"convention", bourbaki ? "Bourbaki" : "VO"},
             {"space_basis", basis},
             {"space_coordinates", coords},
             {"rank", r.rank},
             {"complexity", r.complexity},
             {"essential_part", ess},
             {"trace", r.trace},
             {"levi_dim", r.levi_dim},
             {"dim_l0", r.dim_l0},
             {"rank_l0", r.rank_l0},
             {"ssgp_screen", to_string(screen.verdict)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::string b;
  for (const auto& s : basis) b += (b.empty() ? "" : ", ") + s.get<std::string>();
  std::string items, center, trace;
  for (const auto& s : ess["items"]) items += (items.empty() ? "" : " + ") + s.get<std::string>();
  for (const auto& s : ess["center"]) center += (center.empty() ? "" : ", ") + s.get<std::string>();
  for (const auto& s : r.trace) trace += (trace.empty() ? "" : ", ") + s;
  std::cout << "pair:           " << to_string(p) << "\n"
            << "convention:     " << (bourbaki ? "Bourbaki" : "VO") << "\n"
            << "a(g,h):         <" << b << ">\n"
            << "rank:           " << r.rank << "\n"
            << "complexity:     " << r.complexity << (r.complexity == 0 ? " (spherical)" : "") << "\n"
            << "essential part: " << (items.empty() ? "0" : items) << (center.empty() ? "" : " + z=[" + center + "]")
            << "\n"
            << "dim L:          " << r.levi_dim << "  (dim l0 " << r.dim_l0 << ", rk l0 " << r.rank_l0 << ")\n"
            << "s.g.p. screen:  " << to_string(screen.verdict)
            << (screen.unknown_ideal.empty() ? "" : " (" + screen.unknown_ideal + ")") << "\n"
            << "trace:          " << trace << "\n";
  return kOk;
}

int verify(const std::string& target) {
  const VerifyReport rep = target == "all" ? verify_all() : verify_table(parse_table_id(target));
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.anchor << "  " << c.name
              << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  std::cout << rep.checks.size() << " checks, " << rep.failures() << " failed\n";
  return rep.pass() ? kOk : kFailure;
}

int run_survey(int max_rank, const std::string& filter) {
  long want = -1;
  if (filter == "spherical") want = 0;
  else if (filter.rfind("complexity=", 0) == 0) want = std::stol(filter.substr(11));
  else if (!filter.empty()) throw ConstraintError("filter must be 'spherical' or 'complexity=K'");
  long group = -1;
  std::size_t n = 0;
  for (const auto& s : survey(max_rank)) {
    if (want >= 0 && s.complexity != want) continue;
    if (s.complexity != group) {
      group = s.complexity;
      std::cout << "complexity " << group << ":\n";
    }
    std::cout << "  " << to_string(s.pair) << "  rank " << s.rank << "  [" << s.source << "]\n";
    ++n;
  }
  std::cout << n << " pairs\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan spaces, rank and complexity of reductive subalgebra pairs"};
  app.require_subcommand(1);

  std::string expr_text;
  bool as_json = false, bourbaki = false;
  auto* c = app.add_subcommand("compute", "Compute a(g,h), rank, essential part and complexity");
  c->add_option("pair", expr_text, "Pair expression, e.g. \"sl(6)/sp(6)\"")->required();
  c->add_flag("--json", as_json, "Emit JSON");
  c->add_flag("--bourbaki", bourbaki, "Label weights in Bourbaki numbering");

  std::string table;
  auto* v = app.add_subcommand("verify", "Run the catalog verification suites");
  v->add_option("table", table, "Table id (T1.4, T1.6, T3.2, T3.4, T3.6, T3.7, T4.8) or 'all'")->required();

  int max_rank = 4;
  std::string filter;
  auto* s = app.add_subcommand("survey", "List catalog pairs grouped by complexity");
  s->add_option("--max-rank", max_rank, "Bound on the rank of g (at most 12)")->required();
  s->add_option("--filter", filter, "'spherical' or 'complexity=K'");

  CLI11_PARSE(app, argc, argv);
  try {
    if (c->parsed()) return compute(expr_text, as_json, bourbaki);
    if (v->parsed()) return verify(table);
    if (s->parsed()) return run_survey(max_rank, filter);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kFailure;
  } catch (const OutsideCatalog& e) {
    std::cerr << "outside catalog: " << e.what() << "\n";
    return kOutside;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
