#include "cartan/engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "cartan/error.hpp"

namespace cartan {

namespace {

// Parameters of every T1.4/T1.6 row are enumerated up to this bound when
// matching; it covers all ranks up to 12 across both factor patterns.
constexpr long kShapeBound = 28;

using ItemShape = std::pair<ItemKey, std::vector<std::size_t>>;

struct Shape {
  const CatalogEntry* entry = nullptr;
  expr::Env env;
  std::vector<SimpleType> g;
  std::vector<ItemShape> items;  // sorted
};

std::vector<Shape> build_shapes(TableId tid) {
  std::vector<Shape> out;
  for (const auto& e : Catalog::instance().table(tid)) {
    for (const auto& env : admissible_params(e, kShapeBound)) {
      Instance inst;
      try {
        inst = instantiate(e, env, true);
      } catch (const Error&) {
        continue;
      }
      Shape s{&e, env, inst.g, {}};
      for (const auto& item : inst.h) {
        const auto key = item_key(item.name);
        if (!key) continue;
        auto t = item.targets;
        std::sort(t.begin(), t.end());
        s.items.emplace_back(*key, std::move(t));
      }
      std::sort(s.items.begin(), s.items.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

const std::vector<Shape>& shapes(TableId tid) {
  static const std::vector<Shape> t14 = build_shapes(TableId::T1_4);
  static const std::vector<Shape> t16 = build_shapes(TableId::T1_6);
  return tid == TableId::T1_4 ? t14 : t16;
}

struct Match {
  Instance inst;
  std::vector<std::size_t> perm;  // row factor -> local factor
};

std::optional<Match> match(TableId tid, const std::vector<SimpleType>& g, const std::vector<ItemShape>& items) {
  for (const auto& s : shapes(tid)) {
    if (s.g.size() != g.size() || s.items.size() != items.size()) continue;
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (std::size_t f = 0; f < perm.size() && ok; ++f) ok = s.g[f] == g[perm[f]];
      if (!ok) continue;
      std::vector<ItemShape> mapped;
      for (const auto& [key, t] : s.items) {
        std::vector<std::size_t> mt;
        for (auto x : t) mt.push_back(perm[x]);
        std::sort(mt.begin(), mt.end());
        mapped.emplace_back(key, std::move(mt));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped == items) return Match{instantiate(*s.entry, s.env), perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::vector<ItemShape> item_shapes(const std::vector<PairItem>& items) {
  std::vector<ItemShape> out;
  for (const auto& i : items) out.emplace_back(*item_key(i.name), i.targets);
  std::sort(out.begin(), out.end());
  return out;
}

// Moves a vector in row coordinates to local coordinates via perm.
RationalVector relocate(const RationalVector& v, const Instance& inst, const std::vector<std::size_t>& perm,
                        const std::vector<std::size_t>& local_offsets, std::size_t local_dim) {
  RationalVector out(local_dim);
  for (std::size_t f = 0; f < perm.size(); ++f)
    for (int i = 0; i < inst.g[f].rank(); ++i)
      out[local_offsets[perm[f]] + static_cast<std::size_t>(i)] = v[inst.offsets[f] + static_cast<std::size_t>(i)];
  return out;
}

struct LocalResult {
  RationalSubspace space;
  std::vector<PairItem> ess_items;
  RationalSubspace ess_center;
  std::vector<std::string> trace;
};

LocalResult solve_semisimple(const ReductivePair& p) {
  const std::size_t dim = p.weight_dim();
  LocalResult r{RationalSubspace(dim), {}, RationalSubspace(dim), {}};
  if (p.items.empty()) {
    r.space = RationalSubspace::full(dim);
    return r;
  }
  const auto types = p.factor_types();
  const auto offs = p.offsets();
  const auto shape = item_shapes(p.items);
  if (auto m = match(TableId::T1_4, types, shape)) {
    std::vector<RationalVector> gens;
    for (const auto& v : m->inst.generators) gens.push_back(relocate(v, m->inst, m->perm, offs, dim));
    r.space = RationalSubspace::span(gens, dim);
    r.ess_items = p.items;
    r.trace.push_back(m->inst.label());
    return r;
  }
  if (auto m = match(TableId::T1_6, types, shape)) {
    if (m->inst.commutant.dim() == m->inst.commutant.ambient_dim()) {
      r.space = RationalSubspace::full(dim);
      r.trace.push_back(m->inst.label());
      return r;
    }
  }
  throw OutsideCatalog("no T1.4 or T1.6 row matches " + to_string(p));
}

LocalResult solve_with_center(const ReductivePair& p) {
  const std::size_t dim = p.weight_dim();
  const std::size_t ss = p.semisimple_rank();
  const auto types = p.factor_types();
  const auto offs = p.offsets();
  const auto& zb = p.center.basis();
  std::vector<RationalSubspace> a_blocks, s_blocks;
  std::vector<LinearFunctional> funcs(zb.size(), LinearFunctional{RationalVector(dim)});
  LocalResult r{RationalSubspace(dim), p.items, p.center, {}};
  for (std::size_t f = 0; f < types.size(); ++f) {
    std::vector<PairItem> local;
    for (const auto& i : p.items) {
      if (std::find(i.targets.begin(), i.targets.end(), f) == i.targets.end()) continue;
      if (i.targets.size() != 1)
        throw OutsideCatalog("diagonal ideal " + to_string(i.name) + " together with a center: " + to_string(p));
      local.push_back(PairItem{i.name, {0}});
    }
    auto m = match(TableId::T1_6, {types[f]}, item_shapes(local));
    if (!m) throw OutsideCatalog("no T1.6 row matches factor " + to_string(p.g[f]) + " of " + to_string(p));
    const Instance& inst = m->inst;
    const std::size_t x = offs[f] + inst.x_index;
    bool touched = false;
    for (std::size_t b = 0; b < zb.size(); ++b) {
      for (int i = 0; i < types[f].rank(); ++i) {
        const std::size_t c = offs[f] + static_cast<std::size_t>(i);
        if (c != x && zb[b][c] != 0)
          throw OutsideCatalog("center of h leaves z(z_g([h,h])) in factor " + to_string(p.g[f]) + " of " + to_string(p));
      }
      if (zb[b][x] == 0) continue;
      touched = true;
      const auto alpha = alpha_functional(inst, zb[b][x]);
      for (int i = 0; i < types[f].rank(); ++i)
        funcs[b].coeffs[offs[f] + static_cast<std::size_t>(i)] += alpha.coeffs[static_cast<std::size_t>(i)];
    }
    if (!touched) throw OutsideCatalog("decomposable summand " + to_string(p));
    a_blocks.push_back(inst.commutant);
    s_blocks.push_back(inst.saturated);
    r.trace.push_back(inst.label());
  }
  if (p.center_dim) {
    a_blocks.push_back(RationalSubspace::full(p.center_dim));
    s_blocks.push_back(RationalSubspace(p.center_dim));
    for (std::size_t b = 0; b < zb.size(); ++b)
      for (std::size_t j = 0; j < p.center_dim; ++j) funcs[b].coeffs[ss + j] += zb[b][ss + j];
  }
  const auto a = block_sum(a_blocks);
  const auto s = block_sum(s_blocks);
  r.space = annihilator_preimage(a, s, funcs);
  return r;
}

RationalVector lift(const RationalVector& v, const std::vector<std::size_t>& coords, std::size_t dim) {
  RationalVector out(dim);
  for (std::size_t i = 0; i < v.size(); ++i) out[coords[i]] = v[i];
  return out;
}

std::string factor_label(std::size_t f) { return "#" + std::to_string(f + 1); }

struct Assembled {
  RationalSubspace space;
  EssentialPart ess;
  std::vector<std::string> trace;
};

Assembled assemble(const ReductivePair& pair) {
  const std::size_t dim = pair.weight_dim();
  std::vector<RationalVector> space, center;
  Assembled out;
  for (const auto& s : decompose(pair)) {
    const LocalResult r = s.pair.center.dim() ? solve_with_center(s.pair) : solve_semisimple(s.pair);
    for (const auto& v : r.space.basis()) space.push_back(lift(v, s.coords, dim));
    for (const auto& v : r.ess_center.basis()) center.push_back(lift(v, s.coords, dim));
    for (const auto& i : r.ess_items) {
      PairItem g{i.name, {}};
      for (auto t : i.targets) g.targets.push_back(s.factors[t]);
      out.ess.items.push_back(std::move(g));
    }
    if (r.trace.empty()) {
      std::string z;
      for (auto f : s.factors) z += (z.empty() ? "" : ",") + factor_label(f);
      if (s.center_block) z += (z.empty() ? "" : ",") + std::string("z");
      out.trace.push_back("zero(" + z + ")");
    }
    out.trace.insert(out.trace.end(), r.trace.begin(), r.trace.end());
  }
  out.space = RationalSubspace::span(space, dim);
  out.ess.center = RationalSubspace::span(center, dim);
  // Keep the items in their original order.
  std::vector<PairItem> ordered;
  for (const auto& i : pair.items) {
    auto it = std::find(out.ess.items.begin(), out.ess.items.end(), i);
    if (it != out.ess.items.end()) {
      ordered.push_back(*it);
      out.ess.items.erase(it);
    }
  }
  out.ess.items = std::move(ordered);
  return out;
}

std::vector<std::vector<int>> pair_cartan(const ReductivePair& pair) {
  const std::size_t ss = pair.semisimple_rank();
  std::vector<std::vector<int>> c(ss, std::vector<int>(ss, 0));
  const auto types = pair.factor_types();
  const auto offs = pair.offsets();
  for (std::size_t f = 0; f < types.size(); ++f) {
    const auto& m = root_system(types[f]).cartan_matrix();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) c[offs[f] + i][offs[f] + j] = m[i][j];
  }
  return c;
}

}  // namespace

std::vector<Summand> decompose(const ReductivePair& pair) {
  const std::size_t m = pair.g.size();
  const std::size_t nodes = m + (pair.center_dim ? 1 : 0);
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  const auto offs = pair.offsets();
  const std::size_t ss = pair.semisimple_rank();
  auto node_of = [&](std::size_t coord) {
    if (coord >= ss) return m;
    return static_cast<std::size_t>(std::upper_bound(offs.begin(), offs.end(), coord) - offs.begin() - 1);
  };
  for (const auto& i : pair.items)
    for (auto t : i.targets) unite(i.targets.front(), t);
  for (const auto& v : pair.center.basis()) {
    std::optional<std::size_t> first;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      if (first) unite(*first, node_of(c));
      else first = node_of(c);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t n = 0; n < nodes; ++n) groups[find(n)].push_back(n);
  std::vector<Summand> out;
  for (const auto& [root, members] : groups) {
    Summand s;
    std::vector<std::size_t> local_of(m, SIZE_MAX);
    for (auto n : members) {
      if (n == m) {
        s.center_block = true;
        continue;
      }
      local_of[n] = s.factors.size();
      s.factors.push_back(n);
    }
    std::vector<AlgebraName> g;
    for (auto f : s.factors) {
      g.push_back(pair.g[f]);
      for (int i = 0; i < simple_type_of(pair.g[f]).rank(); ++i) s.coords.push_back(offs[f] + static_cast<std::size_t>(i));
    }
    if (s.center_block)
      for (std::size_t j = 0; j < pair.center_dim; ++j) s.coords.push_back(ss + j);
    std::vector<PairItem> items;
    for (const auto& i : pair.items) {
      if (local_of[i.targets.front()] == SIZE_MAX) continue;
      PairItem li{i.name, {}};
      for (auto t : i.targets) li.targets.push_back(local_of[t]);
      items.push_back(std::move(li));
    }
    s.pair = make_pair(std::move(g), s.center_block ? pair.center_dim : 0, std::move(items));
    std::vector<RationalVector> zs;
    for (const auto& v : pair.center.basis()) {
      std::size_t c = 0;
      while (v[c] == 0) ++c;
      if (find(node_of(c)) != root) continue;
      RationalVector lv(s.coords.size());
      for (std::size_t i = 0; i < s.coords.size(); ++i) lv[i] = v[s.coords[i]];
      zs.push_back(std::move(lv));
    }
    s.pair.center = RationalSubspace::span(zs, s.coords.size());
    out.push_back(std::move(s));
  }
  return out;
}

LinearFunctional alpha_functional(const Instance& inst, const Rational& scale) {
  if (inst.entry == nullptr || inst.entry->table != TableId::T1_6)
    throw DomainError("alpha_functional needs a T1.6 instance");
  if (scale == 0) return LinearFunctional{RationalVector(inst.weight_dim)};
  return functional_from_hyperplane(inst.commutant, inst.saturated, inst.lambda, inst.alpha * scale);
}

EssentialPart essential_part(const ReductivePair& pair) { return assemble(pair).ess; }

ReductivePair essential_pair(const ReductivePair& pair, const EssentialPart& ess) {
  ReductivePair p = make_pair(pair.g, pair.center_dim, ess.items);
  p.center = ess.center;
  return p;
}

long levi_centralizer_dim(const ReductivePair& pair, const RationalSubspace& space) {
  if (space.ambient_dim() != pair.weight_dim()) throw DimensionError("levi_centralizer_dim: ambient mismatch");
  const auto types = pair.factor_types();
  const auto offs = pair.offsets();
  long d = static_cast<long>(pair.weight_dim());
  for (std::size_t f = 0; f < types.size(); ++f) {
    const RootSystem& rs = root_system(types[f]);
    std::vector<RationalVector> ws;
    for (const auto& v : space.basis()) {
      RationalVector block(v.begin() + static_cast<long>(offs[f]), v.begin() + static_cast<long>(offs[f] + rs.rank()));
      ws.push_back(rs.weight_vector(block));
    }
    for (const auto& root : rs.roots()) {
      bool orth = true;
      for (const auto& w : ws)
        if (rs.form(root, w) != 0) {
          orth = false;
          break;
        }
      if (orth) ++d;
    }
  }
  return d;
}

CartanResult cartan_space(const ReductivePair& pair) {
  Assembled a = assemble(pair);
  CartanResult r;
  r.space = std::move(a.space);
  r.rank = r.space.dim();
  r.essential_part = std::move(a.ess);
  r.trace = std::move(a.trace);
  r.levi_dim = levi_centralizer_dim(pair, r.space);
  const long rank = static_cast<long>(r.rank);
  const long twice = pair.dim_g() + r.levi_dim - 2 * pair.dim_h() - 2 * rank;
  if (twice < 0 || twice % 2 != 0)
    throw InternalConsistencyError("complexity " + std::to_string(twice) + "/2 for " + to_string(pair));
  r.complexity = twice / 2;
  r.dim_l0 = r.levi_dim - rank;
  r.rank_l0 = static_cast<long>(pair.weight_dim()) - rank;
  return r;
}

long complexity(const ReductivePair& pair) { return cartan_space(pair).complexity; }

bool is_spherical(const ReductivePair& pair) { return complexity(pair) == 0; }

CartanResult twist(const ReductivePair& pair, const std::vector<std::size_t>& sigma) {
  const std::size_t dim = pair.weight_dim();
  const std::size_t ss = pair.semisimple_rank();
  if (sigma.size() != dim) throw DomainError("twist: permutation has the wrong length");
  std::vector<bool> seen(dim, false);
  for (auto s : sigma) {
    if (s >= dim || seen[s]) throw DomainError("twist: not a permutation");
    seen[s] = true;
  }
  for (std::size_t j = ss; j < dim; ++j)
    if (sigma[j] != j) throw DomainError("twist: z(g) coordinates must stay fixed");
  const auto c = pair_cartan(pair);
  for (std::size_t i = 0; i < ss; ++i)
    for (std::size_t j = 0; j < ss; ++j)
      if (c[sigma[i]][sigma[j]] != c[i][j]) throw DomainError("twist: not a diagram automorphism of g");
  CartanResult r = cartan_space(pair);
  r.space = r.space.permuted(sigma);
  const auto offs = pair.offsets();
  auto factor_of = [&](std::size_t coord) {
    return static_cast<std::size_t>(std::upper_bound(offs.begin(), offs.end(), coord) - offs.begin() - 1);
  };
  for (auto& i : r.essential_part.items) {
    for (auto& t : i.targets) t = factor_of(sigma[offs[t]]);
    std::sort(i.targets.begin(), i.targets.end());
  }
  r.essential_part.center = r.essential_part.center.permuted(sigma);
  r.trace.push_back("twisted");
  return r;
}

std::vector<std::vector<std::size_t>> pair_automorphisms(const ReductivePair& pair) {
  const std::size_t dim = pair.weight_dim();
  const auto types = pair.factor_types();
  const auto offs = pair.offsets();
  const std::size_t m = types.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> fperm(m);
  std::iota(fperm.begin(), fperm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t f = 0; f < m && ok; ++f) ok = types[f] == types[fperm[f]];
    if (!ok) continue;
    // Cartesian product of per-factor diagram automorphisms.
    std::vector<std::vector<std::vector<std::size_t>>> autos;
    for (const auto& t : types) autos.push_back(diagram_automorphisms(root_system(t)));
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      std::vector<std::size_t> sigma(dim);
      std::iota(sigma.begin(), sigma.end(), 0);
      for (std::size_t f = 0; f < m; ++f)
        for (int i = 0; i < types[f].rank(); ++i)
          sigma[offs[f] + static_cast<std::size_t>(i)] = offs[fperm[f]] + autos[f][pick[f]][static_cast<std::size_t>(i)];
      out.push_back(std::move(sigma));
      std::size_t f = 0;
      while (f < m && ++pick[f] == autos[f].size()) pick[f++] = 0;
      if (f == m) break;
    }
  } while (std::next_permutation(fperm.begin(), fperm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cartan
