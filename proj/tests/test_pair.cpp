#include <doctest.h>

#include "cartan/error.hpp"
#include "cartan/pair.hpp"

using namespace cartan;

TEST_CASE("simple pair parses") {
  const auto p = parse_pair("sl(4)/sp(4)");
  REQUIRE(p.g.size() == 1);
  CHECK(p.items.size() == 1);
  CHECK(p.items[0].targets == std::vector<std::size_t>{0});
  CHECK(p.dim_g() == 15);
  CHECK(p.dim_h() == 10);
  CHECK(to_string(p) == "sl(4) / sp(4) in #1");
}

TEST_CASE("missing subalgebra reports offset after slash") {
  try {
    parse_pair("sl(6)/");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
}

TEST_CASE("unknown algebra reports its offset") {
  try {
    parse_pair("sl(4) / foo(3)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
}

TEST_CASE("diagonal and center") {
  const auto p = parse_pair("sp(6) + sl(2) + center(1) / sp(4) in #1 + sl(2) in #1*#2 + z=[pi_v(1)#2 + 1/2*c(1)]");
  CHECK(p.items.size() == 2);
  CHECK(p.items[1].targets == std::vector<std::size_t>{0, 1});
  CHECK(p.center.dim() == 1);
  CHECK(p.weight_dim() == 5);
  CHECK(p.dim_h() == 10 + 3 + 1);
}

TEST_CASE("table references expand") {
  const auto p = parse_pair("sl(5) / T1.6:1(n=5,k=3)");
  CHECK(p.center.dim() == 1);
  CHECK(p.items.size() == 1);
  CHECK(to_string(p.items[0].name) == "sl(3)");
  const auto q = parse_pair("sl(5) + sl(4) / T1.4:3(n=2) in #2");
  CHECK(q.items.size() == 1);
  CHECK(q.items[0].targets == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(parse_pair("sl(5) / T1.4:3(n=2)"), ParseError);
}

TEST_CASE("round trip") {
  for (const char* text :
       {"sl(4)/sp(4)", "so(8)/spin(7)", "E6/F4", "sl(2)+sl(2)/sl(2) in #1*#2", "sl(3)/0",
        "sl(5)/sl(3) + z=[pi_v(3) - 2*pi_v(4)]", "sl(3)+center(2)/z=[c(1), pi_v(1) + c(2)]",
        "sp(8) / sp(4) + sl(2) + sl(2)"}) {
    CAPTURE(text);
    const auto p = parse_pair(text);
    CHECK(parse_pair(to_string(p)) == p);
  }
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_pair("sl(3)+sl(3)/sl(2)"), ParseError);
  CHECK_THROWS_AS(parse_pair("sl(3)/z=[c(1)]"), ParseError);
  CHECK_THROWS_AS(parse_pair("sl(3)/z=[pi_v(3)]"), ParseError);
  CHECK_THROWS_AS(parse_pair("sl(3)/sl(2) in #2"), ParseError);
  CHECK_THROWS_AS(parse_pair("so(4)/sl(2)"), ParseError);
}
