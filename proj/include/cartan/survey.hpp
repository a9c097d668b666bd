#pragma once

#include <string>
#include <vector>

#include "cartan/pair.hpp"

namespace cartan {

struct SurveyEntry {
  std::string source;  // "T1.4:3(n=2)", or "T1.6:1(n=5,k=3)+z" for the full center
  ReductivePair pair;
  std::size_t rank = 0;
  long complexity = 0;
};

/// Every pair built from a T1.4 row, or from a T1.6 row with trivial or full
/// center, whose g has total rank at most max_rank (1..12). Sorted by
/// complexity, then table, row and parameters; repeated pairs keep their
/// first source.
std::vector<SurveyEntry> survey(int max_rank);

}  // namespace cartan
