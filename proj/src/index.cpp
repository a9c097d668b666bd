#include "cartan/index.hpp"

#include "cartan/catalog.hpp"
#include "cartan/error.hpp"

namespace cartan {

namespace {

RationalVector fundamental(SimpleType t, int i) {
  RationalVector v(static_cast<std::size_t>(t.rank()));
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

using Weights = std::vector<RationalVector>;

// Highest weights (in h coordinates, with multiplicity by repetition) of tau_g
// restricted to h; nullopt if the embedding is not one of the standard ones.
std::optional<Weights> tau_restriction(const AlgebraName& h, const ItemKey& hk,
                                                           const AlgebraName& g) {
  const SimpleType t = hk.type;
  const long n = tau_dim(g);
  const bool spin = hk.kind == EmbeddingKind::Spin;
  auto tau = [&] { return fundamental(t, 1); };
  auto tau_star = [&] {
    return fundamental(t, t.rank());  // A_l: pi_l
  };
  const AlgebraName hc = spin ? h : (h.is_letter() ? classical_name(t) : h);
  if (hc.family == "G") {
    if ((g.family == "sl" || g.family == "so") && n >= 7) return Weights{fundamental(t, 1)};
    return std::nullopt;
  }
  if (spin) {
    if ((g.family == "sl" || g.family == "so") && n >= 8) return Weights{fundamental(t, 3)};
    return std::nullopt;
  }
  if (hc.is_letter()) return std::nullopt;
  const long k = tau_dim(hc);
  if (g.family == "sl") {
    if (k > n) return std::nullopt;
    if (hc.family == "sl" || hc.family == "sp" || hc.family == "so") return Weights{tau()};
  } else if (g.family == "so") {
    if (hc.family == "so" && k <= n) return Weights{tau()};
    if (hc.family == "sl" && 2 * k <= n) {
      if (t.rank() == 1) return Weights{tau(), tau()};
      return Weights{tau(), tau_star()};
    }
    if (hc.family == "sp" && 2 * k <= n) return Weights{tau(), tau()};
  } else if (g.family == "sp") {
    // sl(2) in sp(2n) is the block sp(2).
    if ((hc.family == "sp" || (hc.family == "sl" && k == 2)) && k <= n) return Weights{tau()};
    if (hc.family == "sl" && 2 * k <= n) return Weights{tau(), tau_star()};
  }
  return std::nullopt;
}

std::optional<Integer> catalog_constant(SimpleType g, const ItemKey& hk) {
  const Catalog& cat = Catalog::instance();
  for (TableId tid : {TableId::T3_6, TableId::T3_7}) {
    for (const auto& e : cat.table(tid)) {
      if (!e.has("index") || !e.params.empty()) continue;
      const Instance inst = instantiate(e, expr::Env{});
      if (inst.g.size() != 1 || !(inst.g[0] == g) || inst.h.size() != 1) continue;
      const auto key = item_key(inst.h[0].name);
      if (key && *key == hk) return Integer(e.index.eval_int(expr::Env{}));
    }
  }
  return std::nullopt;
}

}  // namespace

Integer dynkin_index(const AlgebraName& h, const AlgebraName& g) {
  const SimpleType gt = simple_type_of(g);
  const auto hk = item_key(h);
  if (!hk) throw DomainError("the zero algebra " + to_string(h) + " has no Dynkin index");
  if (hk->type == gt && hk->kind == EmbeddingKind::Standard) return 1;
  if (!g.is_letter()) {
    if (const auto res = tau_restriction(h, *hk, g)) {
      const RootSystem& hr = root_system(hk->type);
      const RootSystem& gr = root_system(gt);
      Rational d = 0;
      for (const auto& w : *res) d += module_dynkin_index(hr, w);
      Rational i = d / module_dynkin_index(gr, fundamental(gt, 1));
      i.canonicalize();
      if (i.get_den() != 1 || i <= 0)
        throw InternalConsistencyError("non-integral Dynkin index for " + to_string(h) + " in " + to_string(g));
      return i.get_num();
    }
  } else if (const auto c = catalog_constant(gt, *hk)) {
    return *c;
  }
  throw OutsideCatalog("no Dynkin index known for " + to_string(h) + " in " + to_string(g));
}

Integer dynkin_index(const PairItem& item, const ReductivePair& pair) {
  Integer s = 0;
  for (auto t : item.targets) s += dynkin_index(item.name, pair.g.at(t));
  return s;
}

Rational module_index_complement(SimpleType g, SimpleType h, const Integer& index) {
  Rational l = Rational(index * k_value_closed_form(g)) / Rational(k_value_closed_form(h)) - 1;
  l.canonicalize();
  return l;
}

Rational module_index_complement(const AlgebraName& g, const AlgebraName& h) {
  const auto hk = item_key(h);
  if (!hk) throw DomainError("the zero algebra " + to_string(h) + " has no module index");
  return module_index_complement(simple_type_of(g), hk->type, dynkin_index(h, g));
}

std::string to_string(ScreenVerdict v) {
  switch (v) {
    case ScreenVerdict::PossiblyNontrivial: return "possibly-nontrivial";
    case ScreenVerdict::TriviallyForced: return "trivial-forced";
    case ScreenVerdict::ContainedInIndexOneIdeals: return "contained-in-index-1-ideals";
    case ScreenVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

ScreenResult screen_nontrivial_ssgp(const ReductivePair& pair) {
  ScreenResult r;
  bool all_above = true, all_at_least = true;
  for (const auto& item : pair.items) {
    std::string label = to_string(item.name) + " in ";
    for (std::size_t i = 0; i < item.targets.size(); ++i)
      label += (i ? "*#" : "#") + std::to_string(item.targets[i] + 1);
    IdealIndex ii{label, std::nullopt};
    try {
      const auto hk = item_key(item.name);
      Rational s = 0;
      for (auto t : item.targets)
        s += Rational(dynkin_index(item.name, pair.g.at(t)) * k_value_closed_form(simple_type_of(pair.g[t])));
      Rational l = s / Rational(k_value_closed_form(hk->type)) - 1;
      l.canonicalize();
      ii.index = l;
      if (l <= 1) all_above = false;
      if (l < 1) all_at_least = false;
    } catch (const OutsideCatalog&) {
      if (r.unknown_ideal.empty()) r.unknown_ideal = label;
    }
    r.ideals.push_back(std::move(ii));
  }
  if (!r.unknown_ideal.empty()) r.verdict = ScreenVerdict::Unknown;
  else if (pair.items.empty() || !all_at_least) r.verdict = ScreenVerdict::PossiblyNontrivial;
  else if (all_above) r.verdict = ScreenVerdict::TriviallyForced;
  else r.verdict = ScreenVerdict::ContainedInIndexOneIdeals;
  return r;
}

}  // namespace cartan
