#include "cartan/verify.hpp"

#include <set>

#include "cartan/engine.hpp"
#include "cartan/error.hpp"
#include "cartan/index.hpp"

namespace cartan {

bool VerifyReport::pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return z.get_str(); }

class Recorder {
 public:
  explicit Recorder(std::string anchor) : anchor_(std::move(anchor)) {}
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    report_.checks.push_back(CheckResult{anchor_, name, ok, detail});
  }
  VerifyReport take() { return std::move(report_); }

 private:
  std::string anchor_;
  VerifyReport report_;
};

std::string anchor_of(const CatalogEntry& e, const expr::Env& env) {
  const std::string p = format_params(e, env);
  return e.id() + (p.empty() ? "" : "(" + p + ")");
}

RationalVector fundamental(SimpleType t, long j) {
  if (j < 1 || j > t.rank()) throw DomainError("R(" + std::to_string(j) + ") outside rank of " + t.name());
  RationalVector v(static_cast<std::size_t>(t.rank()));
  v[static_cast<std::size_t>(j - 1)] = 1;
  return v;
}

ReductivePair pair_from_instance(const Instance& inst) {
  std::vector<PairItem> items;
  for (const auto& i : inst.h) {
    if (!item_key(i.name)) continue;
    auto t = i.targets;
    std::sort(t.begin(), t.end());
    items.push_back(PairItem{i.name, t});
  }
  return make_pair(inst.g_names, 0, std::move(items));
}

void check_k_series(Recorder& rec, const CatalogEntry& e) {
  const std::string letter = e.field("series");
  const Series s = static_cast<Series>(letter.at(0) - 'A');
  const long lmin = std::stol(e.field("lmin"));
  const long lmax = e.has("lmax") ? std::stol(e.field("lmax")) : 12;
  for (long l = lmin; l <= lmax; ++l) {
    const SimpleType t(s, static_cast<int>(l));
    const RootSystem& rs = root_system(t);
    expr::Env env;
    env.ints["l"] = l;
    const Integer closed = e.kg.eval_int(env);
    const Integer k = k_value(rs);
    Integer k2 = k;
    for (const auto& r : rs.roots())
      if (rs.is_long(r) && r != rs.highest_root()) {
        k2 = k_value(rs, r);
        break;
      }
    rec.check("k_g(" + t.name() + ") by root enumeration equals " + e.kg.text(), k == closed && k2 == closed,
              "enumerated " + str(k) + ", second long root " + str(k2) + ", closed form " + str(closed));
  }
}

void check_index_one(Recorder& rec, const Instance& inst) {
  const auto& g = inst.g_names[0];
  const auto& h = inst.h[0].name;
  const Integer i = dynkin_index(h, g);
  rec.check("i(" + to_string(h) + ", " + to_string(g) + ") = 1", i == 1, str(i));
}

void check_k_order(Recorder& rec, const Instance& inst) {
  const auto hk = item_key(inst.h[0].name);
  if (!hk || (hk->type == inst.g[0] && hk->kind == EmbeddingKind::Standard)) return;
  const Integer kh = k_value_closed_form(hk->type), kg = k_value_closed_form(inst.g[0]);
  rec.check("k_h < k_g", kh < kg, str(kh) + " < " + str(kg));
}

void check_module_index(Recorder& rec, const Instance& inst, bool exact) {
  const Rational l = module_index_complement(inst.g_names[0], inst.h[0].name);
  if (exact) rec.check("l(g/h) = i k_g / k_h - 1 = 1", l == 1, str(l));
  else rec.check("l(g/h) = i k_g / k_h - 1 < 1", l < 1, str(l));
  if (inst.entry->has("index")) {
    const Integer stored = inst.entry->index.eval_int(inst.env);
    rec.check("stored Dynkin index is a positive integer", stored > 0, str(stored));
  }
}

// The listed g/h module of a T3.7 row, without its trivial part.
void check_listed_module(Recorder& rec, const Instance& inst) {
  const CatalogEntry& e = *inst.entry;
  const AlgebraName& h = inst.h[0].name;
  const SimpleType ht = item_key(h)->type;
  const RootSystem& rs = root_system(ht);
  const Rational adj = module_dynkin_index(rs, rs.weight_coords(rs.highest_root()));
  Rational l = 0;
  Integer dim = 0;
  for (const auto& m : e.modules) {
    const long mult = m.multiplicity.eval_int(inst.env);
    const auto& r = m.factors.at(0);
    l += mult * module_dynkin_index(rs, rep_weight(r, h, inst.env)) / adj;
    dim += mult * rep_dim(r, h, inst.env);
  }
  l.canonicalize();
  rec.check("index of the listed module is 1", l == 1, str(l));
  const long trivial = family_dim(inst.g_names[0]) - family_dim(h) - dim.get_si();
  rec.check("listed module fits in g/h", trivial >= 0, std::to_string(trivial) + " trivial summands");
}

void check_t14(Recorder& rec, const Instance& inst) {
  const std::size_t rank = rank_of(inst.generators, inst.weight_dim);
  rec.check("generators are linearly independent", rank == inst.generators.size(),
            std::to_string(rank) + " of " + std::to_string(inst.generators.size()));
  bool dominant = true;
  for (const auto& v : inst.generators)
    for (const auto& c : v) dominant = dominant && c >= 0 && c.get_den() == 1;
  rec.check("generators are dominant integral", dominant);
  const auto pair = pair_from_instance(inst);
  try {
    const auto r = cartan_space(pair);
    rec.check("engine reproduces the row", r.rank == rank && r.trace == std::vector<std::string>{inst.label()},
              "rank " + std::to_string(r.rank) + " via " + (r.trace.empty() ? "" : r.trace[0]));
    rec.check("complexity is a nonnegative integer", r.complexity >= 0, std::to_string(r.complexity));
  } catch (const Error& err) {
    rec.check("engine reproduces the row", false, err.what());
  }
}

void check_t16(Recorder& rec, const Instance& inst) {
  const auto& a = inst.commutant;
  const auto& s = inst.saturated;
  rec.check("saturated space is a hyperplane of the commutant space", a.contains(s) && s.dim() + 1 == a.dim(),
            std::to_string(s.dim()) + " in " + std::to_string(a.dim()));
  rec.check("lambda lies in the commutant space but not in the saturated one", a.contains(inst.lambda) && !s.contains(inst.lambda));
  try {
    const auto f = alpha_functional(inst);
    bool kills = true;
    for (const auto& v : s.basis()) kills = kills && f(v) == 0;
    rec.check("alpha_x vanishes on the saturated space", kills);
    rec.check("alpha_x(lambda) = " + str(inst.alpha), f(inst.lambda) == inst.alpha && inst.alpha != 0, str(f(inst.lambda)));
    rec.check("alpha is linear in x", alpha_functional(inst, 2)(inst.lambda) == 2 * inst.alpha &&
                                          alpha_functional(inst, 0).is_zero());
  } catch (const ContractError& err) {
    rec.check("alpha_x is well defined", false, err.what());
  }
  auto pair = pair_from_instance(inst);
  try {
    const auto semi = cartan_space(pair);
    rec.check("engine a(g,[h,h]) equals the commutant space", semi.space == a);
    RationalVector z(inst.weight_dim);
    z[inst.x_index] = 1;
    pair.center = RationalSubspace::span(std::vector<RationalVector>{z}, inst.weight_dim);
    const auto full = cartan_space(pair);
    rec.check("engine a(g,[h,h]+z) equals the saturated space", full.space == s);
    rec.check("rank drops by dim z", full.rank + 1 == semi.rank,
              std::to_string(semi.rank) + " -> " + std::to_string(full.rank));
  } catch (const Error& err) {
    rec.check("engine handles the row", false, err.what());
  }
}

long normalizer_dim(const AlgebraName& a) { return a.family == "z" ? 1 : family_dim(a); }

void check_t48(Recorder& rec, const CatalogEntry& e, const expr::Env& env) {
  const AlgebraName g = substitute(e.g.at(0), env);
  std::vector<AlgebraName> n;
  std::vector<AlgebraName> simple;
  for (const auto& p : e.normalizer) {
    n.push_back(substitute(p, env));
    if (!p.is_center()) simple.push_back(n.back());
  }
  long dn = 0;
  for (const auto& a : n) dn += normalizer_dim(a);
  Integer dm = 0, trace = 0;
  for (const auto& m : e.modules) {
    if (m.factors.size() != simple.size()) {
      rec.check("module factors match the simple ideals", false);
      return;
    }
    Integer d = m.multiplicity.eval_int(env);
    for (std::size_t i = 0; i < simple.size(); ++i) d *= rep_dim(m.factors[i], simple[i], env);
    dm += d;
    trace += d * m.exponent.eval_int(env);
  }
  rec.check("dim g = dim n + sum of module dimensions", family_dim(g) == dn + dm.get_si(),
            std::to_string(family_dim(g)) + " = " + std::to_string(dn) + " + " + str(dm));
  rec.check("center acts with trace zero", trace == 0, str(trace));
  // The first ideal of the normalizer is the subalgebra of the linked row.
  const auto colon = e.link.find(':');
  try {
    const auto& linked = Catalog::instance().lookup(parse_table_id(e.link.substr(0, colon)), e.link.substr(colon + 1));
    const Instance li = instantiate(linked, env);
    rec.check("first normalizer ideal is the h of " + e.link,
              item_key(li.h[0].name) == item_key(n.at(0)) && li.g[0] == simple_type_of(g));
  } catch (const Error& err) {
    rec.check("first normalizer ideal is the h of " + e.link, false, err.what());
  }
  bool in_range = true;
  for (const auto& ideal : e.ideals) {
    if (!ideal.when.empty() && !ideal.when.eval_bool(env)) continue;
    std::set<long> seen;
    for (const auto& m : ideal.members) {
      const long k = m.eval_int(env);
      in_range = in_range && k >= 1 && static_cast<std::size_t>(k) <= n.size() && seen.insert(k).second;
    }
  }
  rec.check("listed ideals refer to normalizer summands", in_range);
}

}  // namespace

RationalVector rep_weight(const RepPattern& r, const AlgebraName& item, const expr::Env& env) {
  const auto key = item_key(item);
  if (!key) throw DomainError("no weights for " + to_string(item));
  const SimpleType t = key->type;
  const int l = t.rank();
  switch (r.kind) {
    case RepPattern::One: return RationalVector(static_cast<std::size_t>(l));
    case RepPattern::Tau: return fundamental(t, 1);
    case RepPattern::TauDual: return fundamental(t, t.series() == Series::A ? l : 1);
    case RepPattern::Wedge2:
      if (t.series() != Series::A) break;
      return l == 1 ? RationalVector(1) : fundamental(t, 2);
    case RepPattern::Wedge2Dual:
      if (t.series() != Series::A) break;
      return l == 1 ? RationalVector(1) : fundamental(t, l - 1);
    case RepPattern::Highest: return fundamental(t, r.index.eval_int(env));
  }
  throw DomainError("module not defined for " + to_string(item));
}

Integer rep_dim(const RepPattern& r, const AlgebraName& item, const expr::Env& env) {
  switch (r.kind) {
    case RepPattern::One: return 1;
    case RepPattern::Tau:
    case RepPattern::TauDual: return tau_dim(item);
    case RepPattern::Wedge2:
    case RepPattern::Wedge2Dual: {
      const long n = tau_dim(item);
      return n * (n - 1) / 2;
    }
    case RepPattern::Highest: {
      const auto key = item_key(item);
      if (!key) throw DomainError("no modules R(j) for " + to_string(item));
      return weyl_dim(root_system(key->type), rep_weight(r, item, env));
    }
  }
  return 0;
}

VerifyReport verify_entry(const CatalogEntry& e, const expr::Env& env) {
  Recorder rec(anchor_of(e, env));
  try {
    if (e.table == TableId::T3_2) {
      check_k_series(rec, e);
    } else if (e.table == TableId::T4_8) {
      check_constraint(e, env);
      check_t48(rec, e, env);
    } else {
      const Instance inst = instantiate(e, env);
      rec.check("row instantiates", true);
      switch (e.table) {
        case TableId::T1_4: check_t14(rec, inst); break;
        case TableId::T1_6: check_t16(rec, inst); break;
        case TableId::T3_4:
          check_index_one(rec, inst);
          check_k_order(rec, inst);
          break;
        case TableId::T3_6:
          check_module_index(rec, inst, false);
          check_k_order(rec, inst);
          break;
        case TableId::T3_7:
          check_module_index(rec, inst, true);
          check_listed_module(rec, inst);
          check_k_order(rec, inst);
          break;
        default: break;
      }
    }
  } catch (const InternalConsistencyError& err) {
    rec.check("internal consistency", false, err.what());
  } catch (const Error& err) {
    rec.check("row instantiates", false, err.what());
  }
  return rec.take();
}

std::vector<expr::Env> sample_params(const CatalogEntry& e) {
  if (e.params.empty() || e.table == TableId::T3_2) return {expr::Env{}};
  std::vector<expr::Env> out;
  if (auto m = minimal_params(e)) out.push_back(*m);
  if (auto m = minimal_plus_two(e)) out.push_back(*m);
  return out;
}

VerifyReport verify_table(TableId t) {
  VerifyReport r;
  for (const auto& e : Catalog::instance().table(t)) {
    const auto envs = sample_params(e);
    if (envs.empty()) r.checks.push_back(CheckResult{e.id(), "row has admissible parameters", false, ""});
    for (const auto& env : envs) r.append(verify_entry(e, env));
  }
  return r;
}

VerifyReport verify_all() {
  VerifyReport r;
  for (TableId t : all_tables()) r.append(verify_table(t));
  return r;
}

}  // namespace cartan
