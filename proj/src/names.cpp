#include "cartan/names.hpp"

#include <cctype>

#include "cartan/error.hpp"

namespace cartan {

namespace {

std::optional<Series> letter_series(char c) {
  if (c < 'A' || c > 'G') return std::nullopt;
  return static_cast<Series>(c - 'A');
}

bool is_classical_family(std::string_view f) {
  return f == "sl" || f == "sp" || f == "so" || f == "spin";
}

}  // namespace

std::string to_string(const AlgebraName& a) {
  if (a.is_letter()) return a.family + std::to_string(a.size);
  return a.family + "(" + std::to_string(a.size) + ")";
}

AlgebraName parse_algebra_name(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  AlgebraName a;
  a.family = std::string(text.substr(0, i));
  if (!(is_classical_family(a.family) || (a.family.size() == 1 && letter_series(a.family[0]))))
    throw ParseError("unknown algebra family '" + a.family + "'", 0);
  bool paren = i < text.size() && text[i] == '(';
  if (paren) ++i;
  const std::size_t digits = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits) throw ParseError("expected a size", i);
  a.size = std::stol(std::string(text.substr(digits, i - digits)));
  if (paren) {
    if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
    ++i;
  } else if (!a.is_letter()) {
    throw ParseError("expected '(' after " + a.family, digits);
  }
  if (i != text.size()) throw ParseError("trailing characters in algebra name", i);
  return a;
}

std::string to_string(const ItemKey& k) {
  return k.type.name() + (k.kind == EmbeddingKind::Spin ? "[spin]" : "");
}

std::optional<ItemKey> item_key(const AlgebraName& a) {
  const long m = a.size;
  auto bad = [&]() -> DomainError {
    return DomainError("no simple subalgebra " + to_string(a));
  };
  if (a.is_letter()) {
    const auto s = letter_series(a.family[0]);
    if (!valid_rank(*s, static_cast<int>(m))) throw bad();
    return ItemKey{SimpleType(*s, static_cast<int>(m))};
  }
  if (a.family == "sl") {
    if (m == 1) return std::nullopt;
    if (m < 1) throw bad();
    return ItemKey{SimpleType(Series::A, static_cast<int>(m - 1))};
  }
  if (a.family == "sp") {
    if (m < 2 || m % 2) throw bad();
    if (m == 2) return ItemKey{SimpleType(Series::A, 1)};
    return ItemKey{SimpleType(Series::C, static_cast<int>(m / 2))};
  }
  if (a.family == "so") {
    if (m == 1) return std::nullopt;
    if (m < 5) throw bad();
    if (m % 2) return ItemKey{SimpleType(Series::B, static_cast<int>(m / 2))};
    return ItemKey{SimpleType(Series::D, static_cast<int>(m / 2))};
  }
  if (a.family == "spin" && m == 7) return ItemKey{SimpleType(Series::B, 3), EmbeddingKind::Spin};
  throw bad();
}

SimpleType simple_type_of(const AlgebraName& a) {
  const auto k = item_key(a);
  if (!k || k->kind != EmbeddingKind::Standard)
    throw DomainError(to_string(a) + " is not a simple algebra factor");
  return k->type;
}

long family_dim(const AlgebraName& a) {
  const long m = a.size;
  if (a.is_letter()) return simple_type_of(a).dimension();
  if (a.family == "sl") return m * m - 1;
  if (a.family == "sp") return m * (m + 1) / 2;
  if (a.family == "so" || a.family == "spin") return m * (m - 1) / 2;
  throw DomainError("unknown family " + a.family);
}

long tau_dim(const AlgebraName& a) {
  if (a.is_letter() || a.family == "spin")
    throw DomainError("tautological module of " + to_string(a) + " is not defined");
  return a.size;
}

AlgebraName classical_name(SimpleType t) {
  const long l = t.rank();
  switch (t.series()) {
    case Series::A: return {"sl", l + 1};
    case Series::B: return {"so", 2 * l + 1};
    case Series::C: return {"sp", 2 * l};
    case Series::D: return {"so", 2 * l};
    default: return {std::string(1, series_letter(t.series())), l};
  }
}

}  // namespace cartan
