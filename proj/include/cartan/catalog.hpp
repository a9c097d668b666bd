#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cartan/expr.hpp"
#include "cartan/liealg.hpp"
#include "cartan/names.hpp"
#include "cartan/ratspace.hpp"

namespace cartan {

enum class TableId { T1_4, T1_6, T3_2, T3_4, T3_6, T3_7, T4_8 };

/// "T1.4" etc.
std::string to_string(TableId t);
/// Throws ParseError on an unknown id.
TableId parse_table_id(std::string_view text);
const std::vector<TableId>& all_tables();

/// A parameterized algebra "sl(n-k)", optionally with targets "@1*2".
/// The family "z" stands for a one-dimensional center (normalizer patterns).
struct AlgebraPattern {
  std::string family;
  expr::Expr size;
  std::vector<std::size_t> targets;  // 1-based factor numbers

  bool is_center() const { return family == "z"; }
};

/// A module over a simple algebra: tau, taudual, wedge2, wedge2dual, one, R(j).
struct RepPattern {
  enum Kind { Tau, TauDual, Wedge2, Wedge2Dual, One, Highest } kind = One;
  expr::Expr index;  // for Highest
};

/// `[mult :] rep, rep, ... [| exponent]`: a tensor product over the simple
/// ideals in order, with multiplicity and center eigenvalue.
struct ModuleSummand {
  expr::Expr multiplicity;
  std::vector<RepPattern> factors;
  expr::Expr exponent;
};

struct IdealPattern {
  std::vector<expr::Expr> members;  // 1-based positions in the normalizer
  expr::Expr when;
};

/// One table row as loaded from a data file.
struct CatalogEntry {
  TableId table = TableId::T1_4;
  std::string row;
  int line = 0;
  /// Verbatim key/value pairs in file order.
  std::vector<std::pair<std::string, std::string>> fields;

  std::vector<std::string> params;  // upper-case names are series parameters
  expr::Expr constraint;
  std::vector<AlgebraPattern> g;
  std::vector<AlgebraPattern> h;
  expr::ExprList gens;  // generators (T1.4) or a(g,[h,h]) (T1.6)

  // T1.6
  expr::Expr x, lambda, alpha;
  expr::ExprList saturated;     // generators of the saturated space, or
  expr::ExprList saturated_eq;  // terms of one linear constraint on gens
  // T3.2
  expr::Expr kg;
  // T3.6 / T3.7: stored Dynkin index for exceptional targets
  expr::Expr index;
  // T3.7 module g/h_+, T4.8 module g/n(h_1)
  std::vector<ModuleSummand> modules;
  // T4.8
  std::string link;
  std::vector<AlgebraPattern> normalizer;
  std::vector<IdealPattern> ideals;
  bool exhaustive = true;

  std::string id() const { return to_string(table) + ":" + row; }
  bool has(std::string_view key) const;
  /// Throws ContractError if missing.
  const std::string& field(std::string_view key) const;

  friend bool operator==(const CatalogEntry& a, const CatalogEntry& b) {
    return a.table == b.table && a.row == b.row && a.fields == b.fields;
  }
};

/// An item of an instantiated subalgebra pattern.
struct InstanceItem {
  AlgebraName name;
  std::vector<std::size_t> targets;  // 0-based factor indices
};

/// A catalog row with its parameters substituted.
struct Instance {
  const CatalogEntry* entry = nullptr;
  expr::Env env;
  std::vector<AlgebraName> g_names;
  std::vector<SimpleType> g;
  std::vector<InstanceItem> h;
  /// Offsets of each factor in the concatenated fundamental-weight coordinates.
  std::vector<std::size_t> offsets;
  std::size_t weight_dim = 0;
  std::vector<RationalVector> generators;

  // T1.6 data
  std::size_t x_index = 0;  // 0-based: the center is spanned by pi_v(x_index+1)
  RationalVector lambda;
  Rational alpha;
  RationalSubspace commutant;
  RationalSubspace saturated;

  /// "T1.4:3(n=3)".
  std::string label() const;
};

/// Resolves a symbolic weight against concrete factors.
RationalVector resolve_weight(const expr::Value& v, const std::vector<SimpleType>& g,
                              const std::vector<std::size_t>& offsets, std::size_t dim);

/// Evaluates the size of a pattern (and its series letter, if a parameter).
AlgebraName substitute(const AlgebraPattern& p, const expr::Env& env);

/// Renders a parameter binding "n=3,k=2" in declaration order.
std::string format_params(const CatalogEntry& e, const expr::Env& env);

/// Parses "n=3, k=2" (series parameters take a letter) for an entry.
expr::Env parse_params(const CatalogEntry& e, std::string_view text);

/// Evaluates the row constraint on env; throws ConstraintError naming the
/// first violated conjunct.
void check_constraint(const CatalogEntry& e, const expr::Env& env);

/// Substitutes parameters: factors, items, and for T1.4/T1.6 the weights.
/// With `shape_only` only g and h are built.
Instance instantiate(const CatalogEntry& e, const expr::Env& env, bool shape_only = false);

/// All admissible parameter bindings with every parameter in 1..bound
/// (series parameters over all letters), in lexicographic order.
std::vector<expr::Env> admissible_params(const CatalogEntry& e, long bound);

/// The lexicographically first admissible binding, and the first whose
/// leading parameter is at least two more. Empty bindings for rows without
/// parameters.
std::optional<expr::Env> minimal_params(const CatalogEntry& e, long bound = 24);
std::optional<expr::Env> minimal_plus_two(const CatalogEntry& e, long bound = 24);

/// All tables, loaded from plain-text data files and frozen.
class Catalog {
 public:
  /// Loads T1.4.txt ... T4.8.txt from a directory.
  static Catalog load(const std::filesystem::path& dir);
  /// Parses the content of one table file. Errors carry line numbers.
  static std::vector<CatalogEntry> parse_table(std::string_view text, const std::string& source);

  /// Directory from CARTAN_DATA_DIR, else the build-time default.
  static std::filesystem::path default_dir();
  /// Process-wide catalog loaded from default_dir() on first use.
  static const Catalog& instance();

  const std::vector<CatalogEntry>& table(TableId t) const;
  /// Throws OutsideCatalog for an unknown row.
  const CatalogEntry& lookup(TableId t, std::string_view row) const;

  /// Inverse of parse_table.
  static std::string serialize(const std::vector<CatalogEntry>& entries);

 private:
  std::map<TableId, std::vector<CatalogEntry>> tables_;
};

}  // namespace cartan
