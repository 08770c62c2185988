#include "doctest.h"

#include "sdepthkit/error.hpp"
#include "sdepthkit/homology.hpp"
#include "sdepthkit/io.hpp"
#include "support.hpp"

using namespace sdepthkit;
using testing_support::ideal;
using testing_support::mono;

namespace {

VarSet face(std::initializer_list<std::size_t> vs) {
  VarSet f;
  for (auto v : vs) f.insert(v);
  return f;
}

// Stanley-Reisner ideal: the minimal non-faces, here found among all
// subsets since the complexes are tiny.
MonomialIdeal stanley_reisner(const SimplicialComplex& c) {
  const std::size_t n = c.vertices();
  std::vector<Monomial> gens;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    if (c.contains(VarSet(bits))) continue;
    std::vector<Exponent> e(n, 0);
    for (auto j : VarSet(bits).indices()) e[j] = 1;
    gens.emplace_back(e);
  }
  return MonomialIdeal::from_generators(RingContext(n), std::move(gens));
}

// Six-vertex real projective plane.
SimplicialComplex projective_plane() {
  return {6,
          {face({0, 1, 2}), face({0, 2, 3}), face({0, 3, 4}), face({0, 4, 5}), face({0, 1, 5}), face({1, 2, 4}),
           face({1, 3, 4}), face({1, 3, 5}), face({2, 3, 5}), face({2, 4, 5})}};
}

}  // namespace

TEST_CASE("upper Koszul complexes") {
  const auto c1 = upper_koszul(ideal(2, "x1*x2"), Monomial{1, 1});
  CHECK(c1.facets() == std::vector<VarSet>{VarSet()});
  const auto c2 = upper_koszul(ideal(3, "x1, x2, x3"), Monomial{1, 0, 0});
  CHECK(c2.facets() == std::vector<VarSet>{VarSet()});
  const auto c3 = upper_koszul(ideal(3, "x1*x2, x2*x3, x1*x3"), Monomial{1, 1, 1});
  CHECK(c3.faces() == std::vector<VarSet>{VarSet(), VarSet(0b001), VarSet(0b010), VarSet(0b100)});
  // x^a outside I: void
  CHECK(upper_koszul(ideal(2, "x1^2"), Monomial{1, 1}).is_void());
}

TEST_CASE("reduced homology") {
  CHECK(reduced_homology_ranks(SimplicialComplex(0, {VarSet()})) == std::vector<std::size_t>{1});
  CHECK(reduced_homology_ranks(SimplicialComplex(3, {face({0}), face({1}), face({2})})) ==
        std::vector<std::size_t>{0, 2});
  CHECK(reduced_homology_ranks(SimplicialComplex(3, {face({0, 1}), face({1, 2}), face({0, 2})})) ==
        std::vector<std::size_t>{0, 0, 1});
  CHECK(reduced_homology_ranks(SimplicialComplex(3, {face({0, 1, 2})})).empty());
  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(2)).empty());

  // torsion only shows up in characteristic 2
  const auto rp2 = projective_plane();
  CHECK(reduced_homology_ranks(rp2, 0).empty());
  CHECK(reduced_homology_ranks(rp2, 2) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(reduced_homology_ranks(rp2, 3).empty());

  // faces are downward closed
  const SimplicialComplex c(4, {face({0, 1, 2}), face({2, 3}), face({0, 1})});
  CHECK(c.facets().size() == 2);
  CHECK(c.contains(face({0, 2})));
  CHECK_FALSE(c.contains(face({1, 3})));
  CHECK(c.faces().size() == 10);
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({{1, 2}, {2, 4}}, 0) == 1);
  CHECK(exact_rank({{2, 0}, {0, 2}}, 0) == 2);
  CHECK(exact_rank({{2, 0}, {0, 2}}, 2) == 0);
  CHECK(exact_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 0) == 3);
  CHECK(exact_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 2) == 2);
  CHECK(exact_rank({}, 0) == 0);
  // entries large enough to overflow naive elimination
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK(exact_rank({{big, big + 1, 3}, {big + 1, big + 2, 5}, {3, 5, 7}}, 0) == 3);
  CHECK(exact_rank({{-3, 6}, {1, -2}}, 7) == 1);
}

TEST_CASE("Betti numbers") {
  const auto principal = betti(ideal(3, "x1^2*x3"));
  CHECK(principal.entries.size() == 1);
  CHECK(principal.at(0, Monomial{2, 0, 1}) == 1);
  CHECK(principal.max_index() == 0);

  const auto m2 = betti(ideal(2, "x1, x2"));
  CHECK(m2.at(1, Monomial{1, 1}) == 1);
  CHECK(m2.total(0) == 2);
  CHECK(m2 == taylor_betti_oracle(ideal(2, "x1, x2")));

  const auto tri = ideal(3, "x1*x2, x2*x3, x1*x3");
  const auto b = betti(tri);
  CHECK(b.total(0) == 3);
  CHECK(b.total(1) == 2);
  CHECK(b.at(1, Monomial{1, 1, 1}) == 2);
  CHECK(b.max_index() == 1);
  CHECK(proj_dim_quotient(tri) == 2);
  CHECK(depth_quotient(tri) == 1);
  CHECK(depth_ideal(tri) == 2);

  // the zero ideal has an empty resolution
  CHECK(betti(MonomialIdeal::zero(RingContext(2))).entries.empty());
}

TEST_CASE("Betti numbers agree with the Taylor oracle") {
  Rng rng(99);
  int compared = 0;
  while (compared < 500) {
    const std::size_t n = rng.uniform(1, 4);
    const auto i = random_ideal(rng, n, 3, rng.uniform(1, 6));
    if (i.is_unit() || i.is_zero()) continue;
    const auto b = betti(i);
    REQUIRE(b == taylor_betti_oracle(i));
    REQUIRE(b.total(0) == i.generators().size());
    REQUIRE(depth_quotient(i) <= krull_dim_quotient(i));
    REQUIRE(depth_ideal(i) == depth_quotient(i) + 1);
    if (compared % 5 == 0) REQUIRE(betti(i, 2) == taylor_betti_oracle(i, 2));
    ++compared;
  }
}

TEST_CASE("depth values") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::string text;
    for (std::size_t j = 1; j <= n; ++j) text += (j > 1 ? ", x" : "x") + std::to_string(j);
    CHECK(depth_quotient(ideal(n, text)) == 0);
  }
  CHECK(depth_quotient(intersect(testing_support::six_var_q(), testing_support::six_var_q2())) == 1);
  CHECK(depth_quotient(ideal(4, "x1*x3")) == 3);

  CHECK_THROWS_AS(depth_quotient(MonomialIdeal::zero(RingContext(2))), HypothesisError);
  CHECK_THROWS_AS(depth_quotient(MonomialIdeal::unit(RingContext(2))), HypothesisError);
  CHECK_THROWS_AS(depth_ideal(MonomialIdeal::zero(RingContext(2))), HypothesisError);
}

TEST_CASE("depth depends on the characteristic") {
  const auto sr = stanley_reisner(projective_plane());
  CHECK(sr.generators().size() == 10);
  CHECK(depth_quotient(sr, 0) == 3);
  CHECK(depth_quotient(sr, 3) == 3);
  CHECK(depth_quotient(sr, 2) == 2);
  CHECK(betti(sr, 2) == taylor_betti_oracle(sr, 2));
  CHECK(betti(sr, 0) == taylor_betti_oracle(sr, 0));
}

TEST_CASE("primary quotients are Cohen-Macaulay") {
  Rng rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const auto q = random_primary(rng, rng.uniform(1, 4), 3);
    REQUIRE(depth_quotient(q) == krull_dim_quotient(q));
  }
}

TEST_CASE("two primary components with covering supports have depth one") {
  Rng rng(555);
  int seen = 0;
  while (seen < 40) {
    const std::size_t n = rng.uniform(2, 4);
    const auto q = random_primary(rng, n, 2), q2 = random_primary(rng, n, 2);
    const VarSet a = q.support(), b = q2.support();
    if ((a | b) != VarSet::all(n) || (a & b).empty() || a.is_subset_of(b) || b.is_subset_of(a)) continue;
    REQUIRE(depth_quotient(intersect(q, q2)) == 1);
    ++seen;
  }
}
