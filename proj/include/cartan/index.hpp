#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartan/names.hpp"
#include "cartan/pair.hpp"
#include "cartan/rational.hpp"

namespace cartan {

/// Dynkin index i(h,g) of a simple h in a simple g.
///
/// Classical targets: computed as D_h(tau_g restricted to h) / D_g(tau_g)
/// for the standard embeddings (corner sl_k, sp_2k, so_k; sl_k in so and sp
/// through tau + tau*; sp_2k in so through 2 tau; G2 and spin(7) in so_n and
/// sl_n through their 7- and 8-dimensional modules). Exceptional targets: the
/// constant stored with the matching T3.6/T3.7 catalog row. The identity
/// embedding has index 1. Anything else throws OutsideCatalog.
Integer dynkin_index(const AlgebraName& h, const AlgebraName& g);

/// Index of a (possibly diagonal) item of a pair: the sum over its targets.
Integer dynkin_index(const PairItem& item, const ReductivePair& pair);

/// l_h(g/h) = i(h,g) k_g / k_h - 1 for simple h in simple g.
Rational module_index_complement(const AlgebraName& g, const AlgebraName& h);
/// Same with an explicitly supplied Dynkin index.
Rational module_index_complement(SimpleType g, SimpleType h, const Integer& index);

enum class ScreenVerdict { PossiblyNontrivial, TriviallyForced, ContainedInIndexOneIdeals, Unknown };

std::string to_string(ScreenVerdict v);

struct IdealIndex {
  std::string ideal;  // "sl(3) in #1"
  std::optional<Rational> index;
};

struct ScreenResult {
  ScreenVerdict verdict = ScreenVerdict::PossiblyNontrivial;
  std::vector<IdealIndex> ideals;
  /// The first simple ideal whose index could not be computed.
  std::string unknown_ideal;
};

/// Conservative screening of the generic stabilizer of g/h from the module
/// indices of the simple ideals of h: all > 1 forces it to be trivial; all
/// >= 1 confines it to the sum of the ideals with index exactly 1.
ScreenResult screen_nontrivial_ssgp(const ReductivePair& pair);

}  // namespace cartan
