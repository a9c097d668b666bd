#include "cartan/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "cartan/error.hpp"

#ifndef CARTAN_DEFAULT_DATA_DIR
#define CARTAN_DEFAULT_DATA_DIR "data"
#endif

namespace cartan {

namespace {

using expr::Expr;
using expr::ExprList;
using expr::split_top_level;
using expr::trim;

const std::vector<std::pair<TableId, const char*>>& table_names() {
  static const std::vector<std::pair<TableId, const char*>> names = {
      {TableId::T1_4, "T1.4"}, {TableId::T1_6, "T1.6"}, {TableId::T3_2, "T3.2"},
      {TableId::T3_4, "T3.4"}, {TableId::T3_6, "T3.6"}, {TableId::T3_7, "T3.7"},
      {TableId::T4_8, "T4.8"}};
  return names;
}

const std::set<std::string>& allowed_keys(TableId t) {
  static const std::map<TableId, std::set<std::string>> keys = {
      {TableId::T1_4, {"gens"}},
      {TableId::T1_6, {"x", "lambda", "alpha", "commutant", "saturated", "saturated_eq"}},
      {TableId::T3_2, {"series", "kg", "lmin", "lmax"}},
      {TableId::T3_4, {}},
      {TableId::T3_6, {"index"}},
      {TableId::T3_7, {"index", "module"}},
      {TableId::T4_8, {"link", "normalizer", "module", "ideals", "exhaustive"}},
  };
  return keys.at(t);
}

bool is_common_key(const std::string& k) {
  return k == "table" || k == "row" || k == "params" || k == "constraint" || k == "g" ||
         k == "h" || k == "note" || k == "printed";
}

struct RawRecord {
  int line = 0;
  std::vector<std::pair<std::string, std::string>> fields;
};

std::vector<RawRecord> split_records(std::string_view text, const std::string& source) {
  std::vector<RawRecord> out;
  std::vector<std::pair<int, std::string>> logical;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (logical.empty()) throw ParseError(source + ": continuation before any record", 0, number);
      logical.back().second += " " + t;
    } else {
      logical.emplace_back(number, t);
    }
  }
  for (const auto& [ln, body] : logical) {
    RawRecord r;
    r.line = ln;
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i >= body.size()) break;
      const std::size_t eq = body.find('=', i);
      if (eq == std::string::npos)
        throw ParseError(source + ": expected key=value", i, ln);
      std::string key = body.substr(i, eq - i);
      if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
          }))
        throw ParseError(source + ": malformed key '" + key + "'", i, ln);
      i = eq + 1;
      std::string value;
      if (i < body.size() && body[i] == '"') {
        const std::size_t close = body.find('"', i + 1);
        if (close == std::string::npos) throw ParseError(source + ": unterminated quote", i, ln);
        value = body.substr(i + 1, close - i - 1);
        i = close + 1;
      } else {
        const std::size_t start = i;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        value = body.substr(start, i - start);
      }
      for (const auto& f : r.fields)
        if (f.first == key) throw ParseError(source + ": duplicate key '" + key + "'", eq, ln);
      r.fields.emplace_back(std::move(key), std::move(value));
    }
    out.push_back(std::move(r));
  }
  return out;
}

AlgebraPattern parse_algebra_pattern(const std::string& text) {
  const std::string t = trim(text);
  AlgebraPattern p;
  std::size_t i = 0;
  while (i < t.size() && (std::isalpha(static_cast<unsigned char>(t[i])))) ++i;
  p.family = t.substr(0, i);
  if (p.family.empty()) throw ParseError("expected an algebra in '" + t + "'", 0);
  std::string rest = t.substr(i);
  if (p.is_center()) {
    if (!trim(rest).empty()) throw ParseError("unexpected text after z", i);
    return p;
  }
  if (rest.empty() || rest[0] != '(') throw ParseError("expected '(' in '" + t + "'", i);
  int depth = 0;
  std::size_t close = std::string::npos;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] == '(') ++depth;
    if (rest[j] == ')' && --depth == 0) {
      close = j;
      break;
    }
  }
  if (close == std::string::npos) throw ParseError("unbalanced parentheses in '" + t + "'", i);
  p.size = Expr::parse(rest.substr(1, close - 1));
  std::string tail = trim(rest.substr(close + 1));
  if (!tail.empty()) {
    if (tail[0] != '@') throw ParseError("expected '@' in '" + t + "'", i + close + 1);
    for (const auto& piece : split_top_level(tail.substr(1), '*')) {
      const std::string n = trim(piece);
      if (n.empty() || !std::all_of(n.begin(), n.end(), ::isdigit))
        throw ParseError("bad target list in '" + t + "'", i + close + 1);
      p.targets.push_back(std::stoul(n));
    }
  }
  return p;
}

std::vector<AlgebraPattern> parse_algebra_sum(const std::string& text) {
  std::vector<AlgebraPattern> out;
  if (trim(text).empty()) return out;
  for (const auto& piece : split_top_level(text, '+')) out.push_back(parse_algebra_pattern(piece));
  return out;
}

RepPattern parse_rep(const std::string& text) {
  const std::string t = trim(text);
  RepPattern r;
  if (t == "tau") r.kind = RepPattern::Tau;
  else if (t == "taudual") r.kind = RepPattern::TauDual;
  else if (t == "wedge2") r.kind = RepPattern::Wedge2;
  else if (t == "wedge2dual") r.kind = RepPattern::Wedge2Dual;
  else if (t == "one") r.kind = RepPattern::One;
  else if (t.size() > 3 && t[0] == 'R' && t[1] == '(' && t.back() == ')') {
    r.kind = RepPattern::Highest;
    r.index = Expr::parse(t.substr(2, t.size() - 3));
  } else {
    throw ParseError("unknown module '" + t + "'", 0);
  }
  return r;
}

std::vector<ModuleSummand> parse_modules(const std::string& text) {
  std::vector<ModuleSummand> out;
  if (trim(text).empty()) return out;
  for (const auto& raw : split_top_level(text, ';')) {
    std::string s = trim(raw);
    ModuleSummand m;
    m.multiplicity = Expr::parse("1");
    m.exponent = Expr::parse("0");
    if (const auto bar = s.find('|'); bar != std::string::npos) {
      m.exponent = Expr::parse(s.substr(bar + 1));
      s = trim(s.substr(0, bar));
    }
    if (const auto colon = s.find(':'); colon != std::string::npos) {
      m.multiplicity = Expr::parse(s.substr(0, colon));
      s = trim(s.substr(colon + 1));
    }
    for (const auto& r : split_top_level(s, ',')) m.factors.push_back(parse_rep(r));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<IdealPattern> parse_ideals(const std::string& text) {
  std::vector<IdealPattern> out;
  const ExprList list = ExprList::parse(text);
  for (const auto& g : list.groups()) {
    if (!g.var.empty()) throw ParseError("ranges are not allowed in ideal lists", 0);
    out.push_back(IdealPattern{g.items, g.when});
  }
  return out;
}

std::vector<std::string> parse_param_names(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  for (const auto& p : split_top_level(text, ',')) {
    const std::string n = trim(p);
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw ParseError("bad parameter name '" + n + "'", 0);
    out.push_back(n);
  }
  return out;
}

bool is_series_param(const std::string& name) {
  return std::isupper(static_cast<unsigned char>(name[0]));
}

CatalogEntry build_entry(const RawRecord& r, const std::string& source, TableId expected) {
  CatalogEntry e;
  e.line = r.line;
  e.fields = r.fields;
  auto fail = [&](const std::string& what, std::size_t offset = 0) -> ParseError {
    return ParseError(source + ": " + what, offset, r.line);
  };
  if (!e.has("table")) throw fail("record without table");
  if (!e.has("row")) throw fail("record without row");
  try {
    e.table = parse_table_id(e.field("table"));
  } catch (const ParseError&) {
    throw fail("unknown table '" + e.field("table") + "'");
  }
  if (e.table != expected) throw fail("record for " + e.field("table") + " in " + to_string(expected));
  e.row = e.field("row");
  const auto& allowed = allowed_keys(e.table);
  for (const auto& [k, v] : e.fields)
    if (!is_common_key(k) && !allowed.count(k)) throw fail("unknown key '" + k + "'");
  auto get = [&](const char* k) { return e.has(k) ? e.field(k) : std::string(); };
  try {
    e.params = parse_param_names(get("params"));
    e.constraint = Expr::parse(e.has("constraint") ? e.field("constraint") : "1");
    e.g = parse_algebra_sum(get("g"));
    e.h = parse_algebra_sum(get("h"));
    switch (e.table) {
      case TableId::T1_4: e.gens = ExprList::parse(get("gens")); break;
      case TableId::T1_6:
        e.gens = ExprList::parse(get("commutant"));
        e.x = Expr::parse(e.field("x"));
        e.lambda = Expr::parse(e.field("lambda"));
        e.alpha = Expr::parse(e.field("alpha"));
        if (e.has("saturated") == e.has("saturated_eq"))
          throw fail("exactly one of saturated, saturated_eq is required");
        e.saturated = ExprList::parse(get("saturated"));
        e.saturated_eq = ExprList::parse(get("saturated_eq"));
        break;
      case TableId::T3_2: e.kg = Expr::parse(e.field("kg")); break;
      case TableId::T3_6:
      case TableId::T3_7:
        if (e.has("index")) e.index = Expr::parse(e.field("index"));
        e.modules = parse_modules(get("module"));
        break;
      case TableId::T4_8:
        e.link = e.field("link");
        e.normalizer = parse_algebra_sum(e.field("normalizer"));
        e.modules = parse_modules(e.field("module"));
        e.ideals = parse_ideals(get("ideals"));
        if (e.has("exhaustive")) {
          const auto& v = e.field("exhaustive");
          if (v != "true" && v != "false") throw fail("exhaustive must be true or false");
          e.exhaustive = v == "true";
        }
        break;
      case TableId::T3_4: break;
    }
  } catch (const ParseError& err) {
    if (err.line() != 0) throw;
    throw fail(err.what(), err.offset());
  } catch (const ContractError& err) {
    throw fail(err.what());
  }
  return e;
}

std::string quote_if_needed(const std::string& v) {
  const bool plain = !v.empty() && std::none_of(v.begin(), v.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '#';
  });
  return plain ? v : "\"" + v + "\"";
}

std::vector<std::string> conjuncts(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& piece : split_top_level(text, '&'))
    if (!trim(piece).empty()) out.push_back(trim(piece));
  return out;
}

Series series_from_letter(const std::string& s) {
  if (s.size() != 1 || s[0] < 'A' || s[0] > 'G') throw ParseError("expected a series letter, got '" + s + "'", 0);
  return static_cast<Series>(s[0] - 'A');
}

}  // namespace

AlgebraName substitute(const AlgebraPattern& p, const expr::Env& env) {
  AlgebraName a;
  a.family = p.family;
  if (p.is_center()) {
    a.size = 1;
    return a;
  }
  if (a.family.size() == 1 && (a.family[0] < 'A' || a.family[0] > 'G')) {
    const auto it = env.series.find(a.family);
    if (it == env.series.end()) throw ContractError("unbound series parameter '" + a.family + "'");
    a.family = std::string(1, series_letter(it->second));
  }
  a.size = p.size.eval_int(env);
  return a;
}

std::string to_string(TableId t) {
  for (const auto& [id, name] : table_names())
    if (id == t) return name;
  return "?";
}

TableId parse_table_id(std::string_view text) {
  for (const auto& [id, name] : table_names())
    if (text == name) return id;
  throw ParseError("unknown table '" + std::string(text) + "'", 0);
}

const std::vector<TableId>& all_tables() {
  static const std::vector<TableId> ids = {TableId::T1_4, TableId::T1_6, TableId::T3_2, TableId::T3_4,
                                           TableId::T3_6, TableId::T3_7, TableId::T4_8};
  return ids;
}

bool CatalogEntry::has(std::string_view key) const {
  return std::any_of(fields.begin(), fields.end(), [&](const auto& f) { return f.first == key; });
}

const std::string& CatalogEntry::field(std::string_view key) const {
  for (const auto& f : fields)
    if (f.first == key) return f.second;
  throw ContractError(id() + ": missing field '" + std::string(key) + "'");
}

std::string Instance::label() const {
  const std::string p = format_params(*entry, env);
  return entry->id() + (p.empty() ? "" : "(" + p + ")");
}

RationalVector resolve_weight(const expr::Value& v, const std::vector<SimpleType>& g,
                              const std::vector<std::size_t>& offsets, std::size_t dim) {
  if (v.scalar != 0) throw ContractError("weight expression has a constant term");
  RationalVector out(dim);
  for (const auto& [sym, c] : v.terms) {
    if (sym.factor < 1 || static_cast<std::size_t>(sym.factor) > g.size())
      throw ConstraintError("weight refers to factor " + std::to_string(sym.factor));
    const auto& t = g[static_cast<std::size_t>(sym.factor - 1)];
    if (sym.index < 1 || sym.index > t.rank())
      throw ConstraintError(sym.fn + "(" + std::to_string(sym.index) + ") out of range for " + t.name());
    auto i = static_cast<std::size_t>(sym.index - 1);
    if (sym.fn == "pistar") i = root_system(t).dual_permutation()[i];
    out[offsets[static_cast<std::size_t>(sym.factor - 1)] + i] += c;
  }
  return out;
}

std::string format_params(const CatalogEntry& e, const expr::Env& env) {
  std::string out;
  for (const auto& p : e.params) {
    if (!out.empty()) out += ",";
    if (is_series_param(p)) {
      const auto it = env.series.find(p);
      out += p + "=" + (it == env.series.end() ? std::string("?") : std::string(1, series_letter(it->second)));
    } else {
      const auto it = env.ints.find(p);
      out += p + "=" + (it == env.ints.end() ? std::string("?") : std::to_string(it->second));
    }
  }
  return out;
}

expr::Env parse_params(const CatalogEntry& e, std::string_view text) {
  expr::Env env;
  if (!trim(text).empty()) {
    for (const auto& piece : split_top_level(text, ',')) {
      const auto eq = piece.find('=');
      if (eq == std::string::npos) throw ParseError("expected name=value in '" + trim(piece) + "'", 0);
      const std::string name = trim(piece.substr(0, eq));
      const std::string value = trim(piece.substr(eq + 1));
      if (std::find(e.params.begin(), e.params.end(), name) == e.params.end())
        throw ParseError(e.id() + " has no parameter '" + name + "'", 0);
      if (is_series_param(name)) {
        env.series[name] = series_from_letter(value);
      } else {
        if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
            }))
          throw ParseError("parameter '" + name + "' needs an integer", 0);
        env.ints[name] = std::stol(value);
      }
    }
  }
  for (const auto& p : e.params)
    if (!env.ints.count(p) && !env.series.count(p))
      throw ParseError(e.id() + ": parameter '" + p + "' not given", 0);
  return env;
}

void check_constraint(const CatalogEntry& e, const expr::Env& env) {
  for (const auto& p : e.params)
    if (!env.ints.count(p) && !env.series.count(p))
      throw ConstraintError(e.id() + ": parameter '" + p + "' not bound");
  if (e.constraint.eval_bool(env)) return;
  for (const auto& c : conjuncts(e.constraint.text()))
    if (!Expr::parse(c).eval_bool(env))
      throw ConstraintError(e.id() + "(" + format_params(e, env) + ") violates " + c);
  throw ConstraintError(e.id() + "(" + format_params(e, env) + ") violates " + e.constraint.text());
}

Instance instantiate(const CatalogEntry& e, const expr::Env& env, bool shape_only) {
  check_constraint(e, env);
  Instance inst;
  inst.entry = &e;
  inst.env = env;
  try {
    for (const auto& p : e.g) {
      inst.g_names.push_back(substitute(p, env));
      inst.g.push_back(simple_type_of(inst.g_names.back()));
    }
    for (const auto& p : e.h) {
      InstanceItem item{substitute(p, env), {}};
      item_key(item.name);
      if (p.targets.empty() && e.g.size() == 1) item.targets = {0};
      for (auto t : p.targets) {
        if (t < 1 || t > inst.g.size()) throw ContractError(e.id() + ": item targets factor " + std::to_string(t));
        item.targets.push_back(t - 1);
      }
      inst.h.push_back(std::move(item));
    }
  } catch (const DomainError& err) {
    throw ConstraintError(e.id() + "(" + format_params(e, env) + "): " + err.what());
  }
  for (const auto& t : inst.g) {
    inst.offsets.push_back(inst.weight_dim);
    inst.weight_dim += static_cast<std::size_t>(t.rank());
  }
  if (shape_only || (e.table != TableId::T1_4 && e.table != TableId::T1_6)) return inst;

  auto resolve = [&](const expr::Value& v) { return resolve_weight(v, inst.g, inst.offsets, inst.weight_dim); };
  for (const auto& v : e.gens.eval(env)) inst.generators.push_back(resolve(v));
  if (e.table == TableId::T1_4) return inst;

  inst.commutant = RationalSubspace::span(inst.generators, inst.weight_dim);
  const auto xv = e.x.eval(env);
  if (xv.terms.size() != 1 || xv.terms.begin()->first.fn != "pi_v" || xv.terms.begin()->second != 1)
    throw ContractError(e.id() + ": x must be a single dual fundamental weight");
  const auto xw = resolve(xv);
  inst.x_index = static_cast<std::size_t>(std::find(xw.begin(), xw.end(), Rational(1)) - xw.begin());
  inst.lambda = resolve(e.lambda.eval(env));
  inst.alpha = e.alpha.eval_scalar(env);
  if (!e.saturated.groups().empty()) {
    std::vector<RationalVector> s;
    for (const auto& v : e.saturated.eval(env)) s.push_back(resolve(v));
    inst.saturated = RationalSubspace::span(s, inst.weight_dim);
  } else {
    expr::Value form;
    for (const auto& v : e.saturated_eq.eval(env)) {
      for (const auto& [sym, c] : v.terms) {
        if (sym.fn != "x") throw ContractError(e.id() + ": saturated_eq may only use x(i)");
        form.terms[sym] += c;
      }
    }
    std::erase_if(form.terms, [](const auto& kv) { return kv.second == 0; });
    const auto normal = resolve(form);
    const auto hyper = RationalSubspace::span(std::vector<RationalVector>{normal}, inst.weight_dim)
                           .orthogonal_complement();
    inst.saturated = intersect(inst.commutant, hyper);
  }
  return inst;
}

std::vector<expr::Env> admissible_params(const CatalogEntry& e, long bound) {
  std::vector<expr::Env> out;
  expr::Env env;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == e.params.size()) {
      try {
        instantiate(e, env, true);
        out.push_back(env);
      } catch (const ConstraintError&) {
      }
      return;
    }
    const auto& p = e.params[i];
    if (is_series_param(p)) {
      for (int s = 0; s < 7; ++s) {
        env.series[p] = static_cast<Series>(s);
        rec(i + 1);
      }
      env.series.erase(p);
    } else {
      for (long v = 1; v <= bound; ++v) {
        env.ints[p] = v;
        rec(i + 1);
      }
      env.ints.erase(p);
    }
  };
  rec(0);
  return out;
}

namespace {

std::optional<std::string> leading_int_param(const CatalogEntry& e) {
  for (const auto& p : e.params)
    if (!is_series_param(p)) return p;
  return std::nullopt;
}

}  // namespace

std::optional<expr::Env> minimal_params(const CatalogEntry& e, long bound) {
  const auto all = admissible_params(e, bound);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<expr::Env> minimal_plus_two(const CatalogEntry& e, long bound) {
  const auto all = admissible_params(e, bound);
  if (all.empty()) return std::nullopt;
  const auto lead = leading_int_param(e);
  if (!lead) return all.front();
  const long target = all.front().ints.at(*lead) + 2;
  for (const auto& env : all)
    if (env.ints.at(*lead) >= target) return env;
  return std::nullopt;
}

std::vector<CatalogEntry> Catalog::parse_table(std::string_view text, const std::string& source) {
  std::vector<CatalogEntry> out;
  const auto records = split_records(text, source);
  if (records.empty()) return out;
  std::optional<TableId> id;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.fields)
      if (k == "table" && !id) {
        try {
          id = parse_table_id(v);
        } catch (const ParseError&) {
          throw ParseError(source + ": unknown table '" + v + "'", 0, r.line);
        }
      }
    if (!id) throw ParseError(source + ": record without table", 0, r.line);
    out.push_back(build_entry(r, source, *id));
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
      if (out[i].row == out.back().row)
        throw ParseError(source + ": duplicate row '" + out.back().row + "'", 0, r.line);
  }
  return out;
}

std::string Catalog::serialize(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    std::string line;
    for (const auto& [k, v] : e.fields) {
      if (!line.empty()) line += ' ';
      line += k + "=" + quote_if_needed(v);
    }
    out += line + "\n";
  }
  return out;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog c;
  for (const auto id : all_tables()) {
    const auto path = dir / (to_string(id) + ".txt");
    std::ifstream in(path);
    if (!in) throw Error("cannot read catalog file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    c.tables_[id] = parse_table(buf.str(), path.filename().string());
    for (const auto& e : c.tables_[id])
      if (e.table != id) throw ParseError(path.string() + ": foreign record", 0, e.line);
  }
  return c;
}

std::filesystem::path Catalog::default_dir() {
  if (const char* env = std::getenv("CARTAN_DATA_DIR"); env && *env) return env;
  return CARTAN_DEFAULT_DATA_DIR;
}

const Catalog& Catalog::instance() {
  static const Catalog catalog = load(default_dir());
  return catalog;
}

const std::vector<CatalogEntry>& Catalog::table(TableId t) const { return tables_.at(t); }

const CatalogEntry& Catalog::lookup(TableId t, std::string_view row) const {
  for (const auto& e : table(t))
    if (e.row == row) return e;
  throw OutsideCatalog("no row " + to_string(t) + ":" + std::string(row));
}

}  // namespace cartan
