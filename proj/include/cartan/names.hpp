#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "cartan/liealg.hpp"

namespace cartan {

/// An algebra as written: a classical family with its matrix size
/// ("sl(5)", "sp(6)", "so(7)", "spin(7)") or a Cartan letter with rank ("E6").
struct AlgebraName {
  std::string family;
  long size = 0;

  bool is_letter() const { return family.size() == 1; }
  friend auto operator<=>(const AlgebraName&, const AlgebraName&) = default;
};

/// "sl(5)" or "E6".
std::string to_string(const AlgebraName& a);

/// Accepts "sl(5)", "sp(6)", "so(7)", "spin(7)", "A(3)", "E6". Throws ParseError.
AlgebraName parse_algebra_name(std::string_view text);

/// How a simple subalgebra sits in its target: the standard (defining or
/// corner) embedding, or the spinor embedding of so(7).
enum class EmbeddingKind { Standard, Spin };

/// Comparison key for subalgebra items.
struct ItemKey {
  SimpleType type;
  EmbeddingKind kind = EmbeddingKind::Standard;
  friend auto operator<=>(const ItemKey&, const ItemKey&) = default;
};

std::string to_string(const ItemKey& k);

/// Key of a subalgebra item; nullopt for the zero algebras sl(1), so(1).
/// so(2), so(3), so(4) and malformed sizes throw DomainError.
std::optional<ItemKey> item_key(const AlgebraName& a);

/// The simple type of a factor of g. Throws DomainError if not simple.
SimpleType simple_type_of(const AlgebraName& a);

/// Dimension, valid also for degenerate members (sl(1), so(1..4), sp(2)).
long family_dim(const AlgebraName& a);

/// Dimension of the tautological module of a classical family.
long tau_dim(const AlgebraName& a);

/// Classical name of a type (A_l -> sl(l+1), B_l -> so(2l+1), ...); exceptional
/// types keep their letter.
AlgebraName classical_name(SimpleType t);

}  // namespace cartan
