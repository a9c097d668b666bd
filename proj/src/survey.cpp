#include "cartan/survey.hpp"

#include <algorithm>
#include <set>

#include "cartan/catalog.hpp"
#include "cartan/engine.hpp"
#include "cartan/error.hpp"

namespace cartan {

std::vector<SurveyEntry> survey(int max_rank) {
  if (max_rank < 1 || max_rank > 12) throw ConstraintError("survey rank bound must lie in 1..12");
  std::vector<SurveyEntry> out;
  std::set<std::string> seen;
  auto add = [&](std::string source, ReductivePair p) {
    if (!seen.insert(to_string(p)).second) return;
    const auto r = cartan_space(p);
    out.push_back(SurveyEntry{std::move(source), std::move(p), r.rank, r.complexity});
  };
  const long bound = 2L * max_rank + 4;
  for (TableId t : {TableId::T1_4, TableId::T1_6}) {
    for (const auto& e : Catalog::instance().table(t)) {
      for (const auto& env : admissible_params(e, bound)) {
        Instance inst;
        try {
          inst = instantiate(e, env, true);
        } catch (const ConstraintError&) {
          continue;
        }
        if (inst.weight_dim > static_cast<std::size_t>(max_rank)) continue;
        std::vector<PairItem> items;
        for (const auto& i : inst.h) {
          if (!item_key(i.name)) continue;
          auto tg = i.targets;
          std::sort(tg.begin(), tg.end());
          items.push_back(PairItem{i.name, tg});
        }
        ReductivePair p = make_pair(inst.g_names, 0, std::move(items));
        add(inst.label(), p);
        if (t == TableId::T1_6) {
          const Instance full = instantiate(e, env);
          RationalVector z(full.weight_dim);
          z[full.x_index] = 1;
          p.center = RationalSubspace::span(std::vector<RationalVector>{z}, full.weight_dim);
          add(inst.label() + "+z", p);
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SurveyEntry& a, const SurveyEntry& b) { return a.complexity < b.complexity; });
  return out;
}

}  // namespace cartan
