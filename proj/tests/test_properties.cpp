#include <doctest.h>

#include "cartan/engine.hpp"
#include "cartan/error.hpp"
#include "generators.hpp"

using namespace cartan;
using namespace cartan::testgen;

namespace {

std::vector<Piece> random_pieces(PairGenerator& gen, int max_pieces) {
  std::vector<Piece> out;
  const int n = gen.uniform(1, max_pieces);
  for (int i = 0; i < n; ++i) out.push_back(gen.any_piece());
  return out;
}

}  // namespace

TEST_CASE("cartan spaces of direct sums are block sums") {
  PairGenerator gen(101);
  for (int trial = 0; trial < 150; ++trial) {
    const auto pieces = random_pieces(gen, 3);
    const auto total = direct_sum(pieces);
    CAPTURE(to_string(total));
    std::vector<RationalSubspace> parts;
    long c = 0;
    for (const auto& p : pieces) {
      const auto r = cartan_space(p.pair);
      parts.push_back(r.space);
      c += r.complexity;
    }
    const auto r = cartan_space(total);
    CHECK(r.space == concat(parts));
    CHECK(r.complexity == c);
    CHECK(decompose(total).size() == pieces.size());
    CHECK(r.trace.size() == pieces.size());
  }
}

TEST_CASE("the essential part has the same cartan space") {
  PairGenerator gen(202);
  for (int trial = 0; trial < 150; ++trial) {
    const auto total = direct_sum(random_pieces(gen, 3));
    CAPTURE(to_string(total));
    const auto r = cartan_space(total);
    const auto ess = essential_pair(total, r.essential_part);
    const auto e = cartan_space(ess);
    CHECK(e.space == r.space);
    CHECK(e.essential_part == r.essential_part);
    for (const auto& i : r.essential_part.items)
      CHECK(std::find(total.items.begin(), total.items.end(), i) != total.items.end());
    CHECK(total.center.contains(r.essential_part.center));
  }
}

TEST_CASE("rank and complexity are invariant under twists") {
  PairGenerator gen(303);
  for (int trial = 0; trial < 120; ++trial) {
    const auto total = direct_sum(random_pieces(gen, 2));
    CAPTURE(to_string(total));
    const auto autos = pair_automorphisms(total);
    REQUIRE(!autos.empty());
    const auto& sigma = autos[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(autos.size()) - 1))];
    const auto r = cartan_space(total);
    const auto t = twist(total, sigma);
    CHECK(t.rank == r.rank);
    CHECK(t.complexity == r.complexity);
    CHECK(t.space == r.space.permuted(sigma));
    CHECK(levi_centralizer_dim(total, t.space) == r.levi_dim);
  }
}

TEST_CASE("twist rejects non-automorphisms") {
  const auto p = parse_pair("sl(4)/sp(4)");
  CHECK_THROWS_AS(twist(p, {1, 0, 2}), DomainError);
  CHECK_THROWS_AS(twist(p, {0, 0, 2}), DomainError);
  const auto t = twist(p, {2, 1, 0});
  CHECK(t.space == cartan_space(p).space);
  const auto g2 = parse_pair("so(8)/G2");
  CHECK(pair_automorphisms(g2).size() == 6);
  for (const auto& s : pair_automorphisms(g2)) CHECK(twist(g2, s).space == cartan_space(g2).space);
}

TEST_CASE("rank drops by the dimension of the center") {
  PairGenerator gen(404);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = gen.uniform(1, 3);
    std::vector<Piece> pieces;
    for (int i = 0; i < m; ++i) pieces.push_back(gen.center_piece(false));
    const std::size_t zdim = static_cast<std::size_t>(gen.uniform(0, 1));
    const ReductivePair sum = direct_sum(pieces);
    const ReductivePair semi = make_pair(sum.g, zdim, sum.items);
    const std::size_t dim = semi.weight_dim();
    // Directions available to the center of h: every z_i and z(g).
    std::vector<RationalVector> dirs;
    std::vector<RationalSubspace> comm, sat;
    std::size_t base = 0;
    for (const auto& p : pieces) {
      RationalVector v(dim);
      v[base + static_cast<std::size_t>(p.x_coord)] = 1;
      dirs.push_back(v);
      comm.push_back(p.commutant);
      sat.push_back(p.saturated);
      base += p.pair.weight_dim();
    }
    if (zdim) {
      RationalVector v(dim);
      v[dim - 1] = 1;
      dirs.push_back(v);
      comm.push_back(RationalSubspace::full(1));
      sat.push_back(RationalSubspace(1));
    }
    const auto a_semi = concat(comm);
    const auto a_full = concat(sat);
    const int d = gen.uniform(0, static_cast<int>(dirs.size()));
    std::vector<RationalVector> zs;
    for (int k = 0; k < d; ++k) {
      RationalVector v(dim);
      for (const auto& u : dirs)
        if (gen.uniform(0, 2) > 0)
          for (std::size_t i = 0; i < dim; ++i) v[i] += gen.nonzero_rational() * u[i];
      zs.push_back(std::move(v));
    }
    ReductivePair p = semi;
    p.center = RationalSubspace::span(zs, dim);
    CAPTURE(to_string(p));
    const auto r = cartan_space(p);
    CHECK(r.rank + p.center.dim() == a_semi.dim());
    CHECK(a_semi.contains(r.space));
    CHECK(r.space.contains(a_full));
    if (p.center.dim() == 0) CHECK(r.space == a_semi);
    if (p.center.dim() == dirs.size()) CHECK(r.space == a_full);
  }
}

TEST_CASE("proper ideals of T1.4 rows enlarge the cartan space") {
  std::size_t compared = 0;
  for (const auto& [big, small] : {std::pair{"2", "1"}, std::pair{"5", "4"}}) {
    const auto& eb = Catalog::instance().lookup(TableId::T1_4, big);
    const auto& es = Catalog::instance().lookup(TableId::T1_4, small);
    for (const auto& env : admissible_params(eb, 12)) {
      try {
        check_constraint(es, env);
      } catch (const ConstraintError&) {
        continue;
      }
      const auto rb = cartan_space(pair_of(instantiate(eb, env)));
      const auto rs = cartan_space(pair_of(instantiate(es, env)));
      CAPTURE(format_params(eb, env));
      CHECK(rs.space.contains(rb.space));
      CHECK(rs.space.dim() > rb.space.dim());
      ++compared;
    }
  }
  CHECK(compared > 10);
  // Dropping one simple ideal of a random row: whenever the smaller pair is
  // still tabled, its space is strictly larger.
  PairGenerator gen(505);
  for (int trial = 0; trial < 150; ++trial) {
    const auto piece = gen.table_piece();
    if (piece.pair.items.size() < 2) continue;
    auto smaller = piece.pair;
    smaller.items.erase(smaller.items.begin() + gen.uniform(0, static_cast<int>(smaller.items.size()) - 1));
    const auto r = cartan_space(piece.pair);
    try {
      const auto s = cartan_space(smaller);
      CAPTURE(to_string(smaller));
      CHECK(s.space.contains(r.space));
      CHECK(s.space.dim() > r.space.dim());
    } catch (const OutsideCatalog&) {
    }
  }
}

TEST_CASE("printing and parsing are inverse") {
  PairGenerator gen(606);
  for (int trial = 0; trial < 150; ++trial) {
    const auto total = direct_sum(random_pieces(gen, 3));
    const auto text = to_string(total);
    CAPTURE(text);
    CHECK(parse_pair(text) == total);
  }
}

TEST_CASE("both forms of the complexity formula agree") {
  PairGenerator gen(707);
  for (int trial = 0; trial < 150; ++trial) {
    const auto total = direct_sum(random_pieces(gen, 3));
    const auto r = cartan_space(total);
    const long rank = static_cast<long>(r.rank);
    const long first = total.dim_g() + r.dim_l0 - rank;  // twice (dim g + dim l0 - rank)/2
    CHECK(first % 2 == 0);
    CHECK(first / 2 - total.dim_h() == r.complexity);
    CHECK(r.rank_l0 + rank == static_cast<long>(total.weight_dim()));
    CHECK(r.complexity >= 0);
    CHECK(r.rank <= total.weight_dim());
  }
}

TEST_CASE("weyl dimension is invariant under diagram automorphisms") {
  std::mt19937 rng(808);
  const std::vector<SimpleType> types{{Series::A, 4}, {Series::D, 4}, {Series::E, 6}, {Series::D, 5}, {Series::A, 5}};
  for (int trial = 0; trial < 120; ++trial) {
    const auto& rs = root_system(types[static_cast<std::size_t>(trial) % types.size()]);
    RationalVector lambda(static_cast<std::size_t>(rs.rank()));
    for (auto& c : lambda) c = std::uniform_int_distribution<int>(0, 2)(rng);
    const Integer d = weyl_dim(rs, lambda);
    for (const auto& s : diagram_automorphisms(rs)) {
      RationalVector mu(lambda.size());
      for (std::size_t i = 0; i < lambda.size(); ++i) mu[s[i]] = lambda[i];
      CHECK(weyl_dim(rs, mu) == d);
    }
  }
  CHECK(weyl_dim(root_system({Series::E, 8}), RationalVector(8)) == 1);
}
