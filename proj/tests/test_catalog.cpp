#include <doctest.h>

#include "cartan/catalog.hpp"
#include "cartan/error.hpp"

using namespace cartan;

namespace {

const Catalog& cat() { return Catalog::instance(); }

RationalVector pi(std::size_t dim, std::initializer_list<std::size_t> ones) {
  RationalVector v(dim);
  for (auto i : ones) v[i - 1] += 1;
  return v;
}

Instance inst(TableId t, const char* row, const char* params = "") {
  const auto& e = cat().lookup(t, row);
  return instantiate(e, parse_params(e, params));
}

RationalSubspace span(const std::vector<RationalVector>& v, std::size_t dim) { return RationalSubspace::span(v, dim); }

}  // namespace

TEST_CASE("table sizes") {
  CHECK(cat().table(TableId::T1_4).size() == 27);
  CHECK(cat().table(TableId::T1_6).size() == 5);
  CHECK(cat().table(TableId::T3_2).size() == 9);
  CHECK(cat().table(TableId::T3_4).size() == 8);
  CHECK(cat().table(TableId::T3_6).size() == 19);
  CHECK(cat().table(TableId::T3_7).size() == 12);
  CHECK(cat().table(TableId::T4_8).size() == 19);
}

TEST_CASE("lookups") {
  const auto r3 = inst(TableId::T1_4, "3", "n=3");
  CHECK(to_string(r3.g_names[0]) == "sl(6)");
  CHECK(to_string(r3.h[0].name) == "sp(6)");
  CHECK(r3.generators == std::vector<RationalVector>{pi(5, {2}), pi(5, {4})});

  const auto r5 = inst(TableId::T1_6, "5");
  CHECK(r5.x_index == 0);
  CHECK(r5.lambda == pi(6, {1}));
  CHECK(r5.alpha == Rational(4, 3));

  const auto& g = cat().lookup(TableId::T3_2, "G");
  CHECK(g.kg.eval_int(expr::Env{}) == 16);
  CHECK_THROWS_AS(cat().lookup(TableId::T1_4, "28"), OutsideCatalog);
}

TEST_CASE("instantiation examples") {
  CHECK(inst(TableId::T1_4, "1", "n=5,k=4").generators == std::vector<RationalVector>{pi(4, {1}), pi(4, {4})});
  try {
    inst(TableId::T1_4, "1", "n=5,k=2");
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(std::string(e.what()).find("2k>=n+2") != std::string::npos);
  }
  // pi*_i + pi'_i with pi*_1 = pi_2 on A2.
  const auto d = inst(TableId::T1_4, "25", "X=A,r=2");
  CHECK(d.generators == std::vector<RationalVector>{pi(4, {2, 3}), pi(4, {1, 4})});
  const auto e = inst(TableId::T1_4, "25", "X=E,r=7");
  CHECK(e.generators.size() == 7);
  CHECK(e.generators[0] == pi(14, {1, 8}));
  const auto r8 = inst(TableId::T1_4, "8", "n=10,k=6");
  CHECK(r8.generators == std::vector<RationalVector>{pi(5, {1}), pi(5, {2}), pi(5, {3}), pi(5, {4, 5})});
}

TEST_CASE("span of generators") {
  CHECK(span(inst(TableId::T1_4, "3", "n=3").generators, 5).dim() == 2);
}

TEST_CASE("VO numbering of E6 agrees across tables") {
  const auto row19 = inst(TableId::T1_4, "19");
  CHECK(span(row19.generators, 6) == span({pi(6, {1}), pi(6, {5}), pi(6, {6})}, 6));
  const auto row5 = inst(TableId::T1_6, "5");
  CHECK(row5.commutant == span(row19.generators, 6));
  CHECK(row5.saturated == span({pi(6, {1, 5}), pi(6, {6})}, 6));
}

TEST_CASE("overlapping T1.6 rows agree") {
  const auto a = inst(TableId::T1_6, "1", "n=3,k=2");
  const auto b = inst(TableId::T1_6, "3", "n=1");
  CHECK(a.commutant == b.commutant);
  CHECK(a.saturated == b.saturated);
  CHECK(a.x_index == b.x_index);
  CHECK(a.lambda == b.lambda);
  CHECK(a.alpha == b.alpha);
}

TEST_CASE("saturated equation of T1.6 row 1") {
  const auto r = inst(TableId::T1_6, "1", "n=5,k=3");
  CHECK(r.commutant.dim() == 4);
  REQUIRE(r.saturated.dim() == 3);
  // x1 - x4 + 2 x2 - 2 x3 = 0
  for (const auto& v : r.saturated.basis()) CHECK(v[0] - v[3] + 2 * v[1] - 2 * v[2] == 0);
}

TEST_CASE("every row instantiates at minimal and minimal plus two") {
  for (TableId t : all_tables()) {
    if (t == TableId::T3_2) continue;
    for (const auto& e : cat().table(t)) {
      CAPTURE(e.id());
      const auto lo = minimal_params(e);
      REQUIRE(lo);
      if (t == TableId::T4_8) CHECK_NOTHROW(check_constraint(e, *lo));
      else CHECK_NOTHROW(instantiate(e, *lo));
      if (e.params.empty()) continue;
      const auto hi = minimal_plus_two(e);
      REQUIRE(hi);
      if (t == TableId::T4_8) CHECK_NOTHROW(check_constraint(e, *hi));
      else CHECK_NOTHROW(instantiate(e, *hi));
    }
  }
}

TEST_CASE("serialization round trip") {
  for (TableId t : all_tables()) {
    const auto& entries = cat().table(t);
    const auto text = Catalog::serialize(entries);
    const auto again = Catalog::parse_table(text, "roundtrip");
    CHECK(again == entries);
    CHECK(Catalog::serialize(again) == text);
  }
}

TEST_CASE("parse errors carry line numbers") {
  const std::string text =
      "# comment\n"
      "table=T1.4 row=1 g=\"sl(2)\" h=\"sl(2)@1\" gens=\"\"\n"
      "table=T1.4 row=2 g=\"sl(3)\" bogus=1\n";
  try {
    Catalog::parse_table(text, "inline");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    Catalog::parse_table("table=T1.4 row=1 g=\"sl(2\"\n", "inline");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
}
