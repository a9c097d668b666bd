#include <doctest.h>

#include <random>

#include "cartan/error.hpp"
#include "cartan/ratspace.hpp"

using namespace cartan;

namespace {

RationalVector random_vector(std::mt19937& rng, std::size_t n, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  RationalVector v(n);
  for (auto& x : v) {
    x = Rational(d(rng), 1 + (d(rng) + bound) % 3);
    x.canonicalize();
  }
  return v;
}

std::vector<RationalVector> random_vectors(std::mt19937& rng, std::size_t count, std::size_t n) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_vector(rng, n));
  return out;
}

}  // namespace

TEST_CASE("span and membership") {
  auto s = RationalSubspace::span({{1, 1, 0}, {2, 2, 0}}, 3);
  CHECK(s.dim() == 1);
  CHECK(s.contains(RationalVector{Rational(-1, 2), Rational(-1, 2), 0}));
  CHECK_FALSE(s.contains(RationalVector{1, 0, 0}));
  CHECK_THROWS_AS(RationalSubspace::span({{1, 1}}, 3), DimensionError);
  CHECK(RationalSubspace::full(4).dim() == 4);
  CHECK(RationalSubspace(5).dim() == 0);
}

TEST_CASE("RREF is canonical") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto vs = random_vectors(rng, 3, 5);
    auto a = RationalSubspace::span(vs, 5);
    // A different spanning set of the same space.
    std::vector<RationalVector> mixed = vs;
    axpy(mixed[0], 3, vs[1]);
    axpy(mixed[2], Rational(-2, 5), vs[0]);
    mixed.push_back(vs[1]);
    auto b = RationalSubspace::span(mixed, 5);
    CHECK(a == b);
  }
}

TEST_CASE("dimension formula for sum and intersection") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 6;
    std::uniform_int_distribution<int> k(0, 5);
    const auto a = RationalSubspace::span(random_vectors(rng, static_cast<std::size_t>(k(rng)), n), n);
    auto bv = random_vectors(rng, static_cast<std::size_t>(k(rng)), n);
    if (a.dim() > 0 && !bv.empty()) bv[0] = a.basis()[0];
    const auto b = RationalSubspace::span(bv, n);
    const auto s = sum(a, b);
    const auto i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("orthogonal complement") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = RationalSubspace::span(random_vectors(rng, 3, 5), 5);
    const auto c = a.orthogonal_complement();
    CHECK(a.dim() + c.dim() == 5);
    for (const auto& u : a.basis())
      for (const auto& v : c.basis()) CHECK(dot(u, v) == 0);
    CHECK(c.orthogonal_complement() == a);
  }
}

TEST_CASE("permuted") {
  auto s = RationalSubspace::span({{1, 2, 0}}, 3);
  const std::vector<std::size_t> perm = {2, 0, 1};
  CHECK(s.permuted(perm) == RationalSubspace::span({{2, 0, 1}}, 3));
}

TEST_CASE("block sum") {
  const std::vector<RationalSubspace> blocks = {RationalSubspace::span({{1, 1}}, 2),
                                                RationalSubspace::full(1)};
  const auto b = block_sum(blocks);
  CHECK(b.ambient_dim() == 3);
  CHECK(b.dim() == 2);
  CHECK(b.contains(RationalVector{1, 1, 5}));
}

TEST_CASE("annihilator preimage") {
  const auto space = RationalSubspace::full(3);
  const auto quotient = RationalSubspace::span({{0, 0, 1}}, 3);
  const LinearFunctional f{{1, -1, 0}};
  const std::vector<LinearFunctional> fs = {f};
  const auto r = annihilator_preimage(space, quotient, fs);
  CHECK(r.dim() == 2);
  CHECK(r.contains(quotient));
  CHECK(r.contains(RationalVector{1, 1, 0}));
  const std::vector<LinearFunctional> bad = {LinearFunctional{{0, 0, 1}}};
  CHECK_THROWS_AS(annihilator_preimage(space, quotient, bad), ContractError);
  CHECK_THROWS_AS(annihilator_preimage(quotient, space, fs), ContractError);
}

TEST_CASE("functional from hyperplane") {
  const auto space = RationalSubspace::full(2);
  const auto hyper = RationalSubspace::span({{1, 1}}, 2);
  const auto f = functional_from_hyperplane(space, hyper, {1, 0}, 3);
  CHECK(f(RationalVector{1, 0}) == 3);
  CHECK(f(RationalVector{1, 1}) == 0);
  CHECK(f(RationalVector{0, 1}) == -3);
}

TEST_CASE("rank and span solving") {
  const std::vector<RationalVector> cols = {{1, 0, 1}, {0, 1, 1}};
  CHECK(rank_of(cols, 3) == 2);
  RationalVector coeffs;
  CHECK(solve_in_span(cols, {2, 3, 5}, coeffs));
  CHECK(coeffs == RationalVector{2, 3});
  CHECK_FALSE(solve_in_span(cols, {1, 0, 0}, coeffs));
}
