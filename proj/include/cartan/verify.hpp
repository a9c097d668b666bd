#pragma once

#include <string>
#include <vector>

#include "cartan/catalog.hpp"

namespace cartan {

struct CheckResult {
  std::string anchor;  // catalog row, e.g. "T3.7:2(n=3)"
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool pass() const;
  std::size_t failures() const;
  void append(const VerifyReport& other);
};

/// Checks one row at one parameter binding. Failures are report items;
/// a row that cannot be instantiated reports a failed check.
VerifyReport verify_entry(const CatalogEntry& e, const expr::Env& env);

/// The bindings a row is verified at: the minimal admissible one and the
/// minimal one plus two (rows without parameters: the empty binding).
std::vector<expr::Env> sample_params(const CatalogEntry& e);

/// Every row of a table at its sampled bindings. T3.2 checks each series
/// for all ranks up to 12.
VerifyReport verify_table(TableId t);

VerifyReport verify_all();

/// Highest weight of a listed module in the coordinates of a simple item.
RationalVector rep_weight(const RepPattern& r, const AlgebraName& item, const expr::Env& env);

/// Dimension of a listed module; also defined for the degenerate members
/// sl(1), so(0..4) of a family.
Integer rep_dim(const RepPattern& r, const AlgebraName& item, const expr::Env& env);

}  // namespace cartan
