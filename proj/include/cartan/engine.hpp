#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cartan/catalog.hpp"
#include "cartan/pair.hpp"
#include "cartan/ratspace.hpp"

namespace cartan {

/// The essential part of h: retained simple ideals and center, in the
/// coordinates of the original pair.
struct EssentialPart {
  std::vector<PairItem> items;
  RationalSubspace center;

  friend bool operator==(const EssentialPart&, const EssentialPart&) = default;
};

struct CartanResult {
  /// a(g,h) in fundamental-weight coordinates of g followed by z(g).
  RationalSubspace space;
  std::size_t rank = 0;
  EssentialPart essential_part;
  long complexity = 0;
  /// dim L = dim Z_g(a(g,h)).
  long levi_dim = 0;
  /// dim l0 = dim L - rank and rk l0 = rk g - rank.
  long dim_l0 = 0;
  long rank_l0 = 0;
  /// Catalog rows used, one per indecomposable summand ("T1.4:3(n=3)"),
  /// "zero(#i)" for factors on which h vanishes.
  std::vector<std::string> trace;
};

/// An indecomposable summand of a pair.
struct Summand {
  std::vector<std::size_t> factors;  // factor indices of the original pair
  bool center_block = false;         // whether z(g) belongs to this summand
  ReductivePair pair;                // the summand as a pair of its own
  std::vector<std::size_t> coords;   // local coordinate -> original coordinate
};

/// Finest splitting of g (factors plus the z(g) block) compatible with the
/// items of h and with the coordinate support of its center.
std::vector<Summand> decompose(const ReductivePair& pair);

EssentialPart essential_part(const ReductivePair& pair);

/// The pair (g, h^ess).
ReductivePair essential_pair(const ReductivePair& pair, const EssentialPart& ess);

/// Throws OutsideCatalog naming the first summand that matches no row.
CartanResult cartan_space(const ReductivePair& pair);

/// alpha_x for x = scale * pi_v(x_index) of a T1.6 instance, as a functional
/// on the weight coordinates of g.
LinearFunctional alpha_functional(const Instance& inst, const Rational& scale = 1);

/// Signature: sigma is a permutation of the coordinates of the pair that
/// preserves the Cartan matrix of [g,g] and fixes the z(g) coordinates.
/// Returns the result for the twisted subalgebra. Throws DomainError if sigma
/// is not such an automorphism.
CartanResult twist(const ReductivePair& pair, const std::vector<std::size_t>& sigma);

/// Diagram automorphisms of g as coordinate permutations: products of the
/// per-factor automorphisms and permutations of isomorphic factors.
std::vector<std::vector<std::size_t>> pair_automorphisms(const ReductivePair& pair);

/// rk g + dim z(g) + #{roots of g orthogonal to space}.
long levi_centralizer_dim(const ReductivePair& pair, const RationalSubspace& space);

/// (dim g + dim L)/2 - dim h - rank. Throws InternalConsistencyError if the
/// value is negative or not an integer.
long complexity(const ReductivePair& pair);

bool is_spherical(const ReductivePair& pair);

}  // namespace cartan
