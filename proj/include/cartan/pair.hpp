#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cartan/liealg.hpp"
#include "cartan/names.hpp"
#include "cartan/ratspace.hpp"

namespace cartan {

/// A simple ideal of h and the factors of g it embeds into (diagonally when
/// there is more than one).
struct PairItem {
  AlgebraName name;
  std::vector<std::size_t> targets;  // 0-based factor indices, increasing

  friend bool operator==(const PairItem&, const PairItem&) = default;
};

/// A reductive g = simple factors + center, with a reductive subalgebra h
/// given by simple items and a center subspace.
///
/// The center of h lives in coweight coordinates: one block per factor of g
/// (dual fundamental weights pi_v(i)) followed by the center_dim
/// coordinates c(j) of z(g). Weights use the same layout with fundamental
/// weights.
struct ReductivePair {
  std::vector<AlgebraName> g;
  std::size_t center_dim = 0;
  std::vector<PairItem> items;
  RationalSubspace center;

  std::vector<SimpleType> factor_types() const;
  /// Start of each factor block in the coordinate layout.
  std::vector<std::size_t> offsets() const;
  /// Total rank of [g,g] plus center_dim.
  std::size_t weight_dim() const;
  std::size_t semisimple_rank() const;

  long dim_g() const;
  long dim_h() const;

  friend bool operator==(const ReductivePair&, const ReductivePair&) = default;
};

/// Builds a pair with an empty center subspace of the right ambient size.
ReductivePair make_pair(std::vector<AlgebraName> g, std::size_t center_dim,
                        std::vector<PairItem> items);

/// Parses a pair expression. Syntax and semantic errors throw ParseError
/// with the byte offset of the offending token.
///
///   pair    := alg "/" sub
///   alg     := name ("+" name)* ["+" "center(" int ")"]
///   sub     := "0" | term ("+" term)*
///   term    := name ["in" target ("*" target)*]
///            | table ":" row "(" params ")" ["in" "#" int ("*" "#" int)*]
///            | "z=[" [vector ("," vector)*] "]"
///   target  := "#" int | name
///   vector  := ["-"] vterm (("+" | "-") vterm)*
///   vterm   := [rational "*"] ("pi_v(" int ")" ["#" int] | "c(" int ")")
///
/// Table references expand to the row's items (T1.4) or items plus the full
/// center (T1.6).
ReductivePair parse_pair(std::string_view text);

/// Canonical text; parse_pair(to_string(p)) == p.
std::string to_string(const ReductivePair& p);

/// "pi_v(2)#1 + 1/2*c(1)"-style rendering of a coweight-coordinate vector.
std::string format_coweight(const ReductivePair& p, const RationalVector& v);

/// Weight-coordinate vector as "pi(2) + 1/2*pi(1)#2 + c(1)". The factor
/// suffix is omitted when g has one simple factor. With `bourbaki` the labels
/// follow Bourbaki numbering instead of Vinberg-Onishchik.
std::string format_weight(const ReductivePair& p, const RationalVector& v, bool bourbaki = false);

/// Re-indexes a weight or coweight vector from VO to Bourbaki labels.
RationalVector to_bourbaki(const ReductivePair& p, const RationalVector& v);

}  // namespace cartan
