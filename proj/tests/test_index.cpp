#include <doctest.h>

#include "cartan/catalog.hpp"
#include "cartan/error.hpp"
#include "cartan/index.hpp"

using namespace cartan;

namespace {
AlgebraName a(const char* s) { return parse_algebra_name(s); }
}  // namespace

TEST_CASE("dynkin index of standard embeddings") {
  CHECK(dynkin_index(a("sl(3)"), a("sl(7)")) == 1);
  CHECK(dynkin_index(a("sl(4)"), a("sl(4)")) == 1);
  CHECK(dynkin_index(a("E7"), a("E7")) == 1);
  CHECK(dynkin_index(a("so(5)"), a("sl(5)")) == 2);
  CHECK(dynkin_index(a("sp(4)"), a("so(8)")) == 1);
  CHECK(dynkin_index(a("sl(3)"), a("sp(6)")) == 2);
  CHECK(dynkin_index(a("sl(2)"), a("sp(6)")) == 1);
  CHECK(dynkin_index(a("spin(7)"), a("so(8)")) == 1);
  CHECK(dynkin_index(a("spin(7)"), a("sl(8)")) == 2);
  CHECK(dynkin_index(a("G2"), a("so(7)")) == 1);
  CHECK(dynkin_index(a("G2"), a("sl(7)")) == 2);
  CHECK(dynkin_index(a("F4"), a("E6")) == 1);
  CHECK_THROWS_AS(dynkin_index(a("sl(3)"), a("E6")), OutsideCatalog);
  CHECK_THROWS_AS(dynkin_index(a("sl(5)"), a("sl(4)")), OutsideCatalog);
  CHECK_THROWS_AS(dynkin_index(a("spin(7)"), a("so(7)")), OutsideCatalog);
}

TEST_CASE("diagonal embeddings add indices") {
  for (int k = 1; k <= 4; ++k) {
    std::string text = "sl(3)";
    std::string targets;
    for (int i = 1; i < k; ++i) text += " + sl(3)";
    for (int i = 1; i <= k; ++i) targets += (i > 1 ? "*#" : "#") + std::to_string(i);
    const auto p = parse_pair(text + " / sl(3) in " + targets);
    CHECK(dynkin_index(p.items[0], p) == k);
  }
}

TEST_CASE("module index of the complement") {
  CHECK(module_index_complement(a("sl(4)"), a("sp(4)")) == Rational(1, 3));
  CHECK(module_index_complement(a("so(8)"), a("so(5)")) == 1);
  CHECK(module_index_complement(a("sl(4)"), a("sl(2)")) == 1);
  CHECK(module_index_complement(a("G2"), a("sl(3)")) == Rational(1, 3));
  // The candidate printed for so(2n) at n=4 is so(6), which gives 1/2.
  CHECK(module_index_complement(a("so(8)"), a("so(6)")) == Rational(1, 2));
}

TEST_CASE("T3.4 rows have index one") {
  for (const auto& e : Catalog::instance().table(TableId::T3_4)) {
    for (const auto& env : admissible_params(e, 12)) {
      const auto inst = instantiate(e, env);
      CAPTURE(inst.label());
      CHECK(dynkin_index(inst.h[0].name, inst.g_names[0]) == 1);
    }
  }
}

TEST_CASE("T3.6 below one and T3.7 exactly one") {
  for (auto [tid, exact] : {std::pair{TableId::T3_6, false}, std::pair{TableId::T3_7, true}}) {
    for (const auto& e : Catalog::instance().table(tid)) {
      const auto envs = e.params.empty() ? std::vector<expr::Env>{expr::Env{}} : admissible_params(e, 12);
      CAPTURE(e.id());
      CHECK(!envs.empty());
      for (const auto& env : envs) {
        const auto inst = instantiate(e, env);
        if (inst.weight_dim > 12) continue;
        CAPTURE(inst.label());
        const Rational l = module_index_complement(inst.g_names[0], inst.h[0].name);
        if (exact) CHECK(l == 1);
        else CHECK(l < 1);
      }
    }
  }
}

TEST_CASE("k_h < k_g along every listed embedding") {
  for (TableId tid : {TableId::T3_4, TableId::T3_6, TableId::T3_7}) {
    for (const auto& e : Catalog::instance().table(tid)) {
      const auto envs = e.params.empty() ? std::vector<expr::Env>{expr::Env{}} : admissible_params(e, 10);
      for (const auto& env : envs) {
        const auto inst = instantiate(e, env);
        const auto hk = item_key(inst.h[0].name);
        if (!hk || (hk->type == inst.g[0] && hk->kind == EmbeddingKind::Standard)) continue;
        CAPTURE(inst.label());
        CHECK(k_value_closed_form(hk->type) < k_value_closed_form(inst.g[0]));
      }
    }
  }
}

TEST_CASE("screening") {
  CHECK(screen_nontrivial_ssgp(parse_pair("sl(4)/sp(4)")).verdict == ScreenVerdict::PossiblyNontrivial);
  CHECK(screen_nontrivial_ssgp(parse_pair("sl(7)/sl(2)")).verdict == ScreenVerdict::TriviallyForced);
  CHECK(screen_nontrivial_ssgp(parse_pair("sl(4)/sl(2)")).verdict == ScreenVerdict::ContainedInIndexOneIdeals);
  CHECK(screen_nontrivial_ssgp(parse_pair("sl(3)/z=[pi_v(1)]")).verdict == ScreenVerdict::PossiblyNontrivial);
  const auto u = screen_nontrivial_ssgp(parse_pair("E6/sl(3)"));
  CHECK(u.verdict == ScreenVerdict::Unknown);
  CHECK(u.unknown_ideal == "sl(3) in #1");
  const auto d = screen_nontrivial_ssgp(parse_pair("sl(3)+sl(3)/sl(3) in #1*#2"));
  REQUIRE(d.ideals[0].index);
  CHECK(*d.ideals[0].index == 1);
}
