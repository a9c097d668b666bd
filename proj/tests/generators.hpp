#pragma once

// Random catalog-based pairs for property tests.

#include <random>
#include <string>
#include <vector>

#include "cartan/catalog.hpp"
#include "cartan/pair.hpp"

namespace cartan::testgen {

struct Sample {
  const CatalogEntry* entry;
  expr::Env env;
};

/// Admissible bindings of a table with g of rank at most max_rank.
inline std::vector<Sample> samples(TableId t, std::size_t max_rank, long bound = 10) {
  std::vector<Sample> out;
  for (const auto& e : Catalog::instance().table(t)) {
    for (const auto& env : admissible_params(e, bound)) {
      try {
        if (instantiate(e, env, true).weight_dim <= max_rank) out.push_back(Sample{&e, env});
      } catch (const std::exception&) {
      }
    }
  }
  return out;
}

/// One indecomposable piece of a random pair.
struct Piece {
  ReductivePair pair;
  std::string source;
  /// Coordinate of the z_i direction for T1.6 pieces, or -1.
  long x_coord = -1;
  /// T1.6 pieces: a(g,[h,h]) and a(g,[h,h]+z_i).
  RationalSubspace commutant, saturated;
};

inline ReductivePair pair_of(const Instance& inst) {
  std::vector<PairItem> items;
  for (const auto& i : inst.h) {
    if (!item_key(i.name)) continue;
    auto t = i.targets;
    std::sort(t.begin(), t.end());
    items.push_back(PairItem{i.name, t});
  }
  return make_pair(inst.g_names, 0, std::move(items));
}

class PairGenerator {
 public:
  explicit PairGenerator(unsigned seed, std::size_t max_rank = 7)
      : rng_(seed), t14_(samples(TableId::T1_4, max_rank)), t16_(samples(TableId::T1_6, max_rank)) {}

  std::mt19937& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational nonzero_rational() {
    int p = 0;
    while (p == 0) p = uniform(-4, 4);
    Rational q(p, uniform(1, 3));
    q.canonicalize();
    return q;
  }

  /// A T1.4 row instance.
  Piece table_piece() {
    const auto& s = t14_[static_cast<std::size_t>(uniform(0, static_cast<int>(t14_.size()) - 1))];
    const Instance inst = instantiate(*s.entry, s.env);
    return Piece{pair_of(inst), inst.label(), -1, {}, {}};
  }

  /// A T1.6 row instance, with its z_i scaled by a random nonzero rational
  /// or without center.
  Piece center_piece(bool with_center) {
    const auto& s = t16_[static_cast<std::size_t>(uniform(0, static_cast<int>(t16_.size()) - 1))];
    const Instance inst = instantiate(*s.entry, s.env);
    Piece p{pair_of(inst), inst.label(), static_cast<long>(inst.x_index), inst.commutant, inst.saturated};
    if (with_center) {
      RationalVector z(inst.weight_dim);
      z[inst.x_index] = nonzero_rational();
      p.pair.center = RationalSubspace::span(std::vector<RationalVector>{z}, inst.weight_dim);
    }
    return p;
  }

  /// h = 0 on a random simple factor.
  Piece zero_piece() {
    static const char* names[] = {"sl(2)", "sl(3)", "sp(4)", "so(7)", "G2", "so(8)"};
    const AlgebraName a = parse_algebra_name(names[uniform(0, 5)]);
    return Piece{make_pair({a}, 0, {}), "zero", -1, {}, {}};
  }

  Piece any_piece() {
    const int k = uniform(0, 9);
    if (k < 5) return table_piece();
    if (k < 8) return center_piece(k < 7);
    return zero_piece();
  }

 private:
  std::mt19937 rng_;
  std::vector<Sample> t14_, t16_;
};

/// Direct sum of pieces; coordinates of the pieces are concatenated.
inline ReductivePair direct_sum(const std::vector<Piece>& pieces) {
  std::vector<AlgebraName> g;
  std::vector<PairItem> items;
  std::vector<std::size_t> factor_base, coord_base;
  std::size_t nf = 0, nc = 0;
  for (const auto& p : pieces) {
    factor_base.push_back(nf);
    coord_base.push_back(nc);
    for (const auto& a : p.pair.g) g.push_back(a);
    for (const auto& i : p.pair.items) {
      PairItem j{i.name, {}};
      for (auto t : i.targets) j.targets.push_back(t + nf);
      items.push_back(std::move(j));
    }
    nf += p.pair.g.size();
    nc += p.pair.weight_dim();
  }
  ReductivePair out = make_pair(std::move(g), 0, std::move(items));
  std::vector<RationalVector> z;
  for (std::size_t k = 0; k < pieces.size(); ++k)
    for (const auto& v : pieces[k].pair.center.basis()) {
      RationalVector w(nc);
      for (std::size_t i = 0; i < v.size(); ++i) w[coord_base[k] + i] = v[i];
      z.push_back(std::move(w));
    }
  out.center = RationalSubspace::span(z, nc);
  return out;
}

/// Block sum of per-piece subspaces, in the coordinates of direct_sum.
inline RationalSubspace concat(const std::vector<RationalSubspace>& parts) {
  return block_sum(std::span<const RationalSubspace>(parts));
}

}  // namespace cartan::testgen
