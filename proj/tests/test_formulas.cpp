#include "doctest.h"

#include <string>

#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/error.hpp"
#include "sdepthkit/formulas.hpp"
#include "sdepthkit/io.hpp"
#include "sdepthkit/poset.hpp"
#include "support.hpp"

using namespace sdepthkit;
using testing_support::ideal;

namespace {

std::int64_t value_of(const BoundReport& r) {
  REQUIRE_MESSAGE(r.applicable(), r.name);
  return *r.value;
}

// Every non-zero proper irreducible ideal of n variables with exponents at
// most e: one pure power (or nothing) per variable.
std::vector<MonomialIdeal> all_irreducible(std::size_t n, Exponent e) {
  std::vector<MonomialIdeal> out;
  std::vector<Exponent> a(n, 0);
  for (;;) {
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] > 0) gens.push_back(Monomial::variable(n, j, a[j]));
    }
    if (!gens.empty()) out.push_back(MonomialIdeal::from_generators(RingContext(n), gens));
    std::size_t j = n;
    while (j-- > 0) {
      if (a[j] < e) {
        ++a[j];
        break;
      }
      a[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) return out;
  }
}

// The complement of a face as a prime: (x_j : j ∉ F).
MonomialIdeal complement_prime(std::size_t n, std::initializer_list<std::size_t> face) {
  std::vector<Monomial> gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(face.begin(), face.end(), j) == face.end()) gens.push_back(Monomial::variable(n, j));
  }
  return MonomialIdeal::from_generators(RingContext(n), gens);
}

}  // namespace

TEST_CASE("two-component formula on the worked pairs") {
  const auto q = testing_support::six_var_q(), q2 = testing_support::six_var_q2();
  const BoundReport up = thm_up(q, q2);
  CHECK(value_of(up) == 2);
  CHECK(up.kind == BoundKind::kUpper);
  CHECK(up.target == "S/(Q∩Q')");
  // Q is primary but not irreducible
  CHECK_FALSE(thm_low(q, q2).applicable());
  CHECK_FALSE(cor_eg(q, q2).applicable());
  CHECK(value_of(prop_low(q, q2)) == 1);
  CHECK(sdepth_quotient(intersect(q, q2)) == 1);

  const auto a = ideal(5, "x1, x2, x3^2"), b = ideal(5, "x3, x4, x5");
  const BoundReport eg = cor_eg(a, b);
  CHECK(value_of(eg) == 1);
  CHECK(eg.inputs == std::vector<std::pair<std::string, std::int64_t>>{
                         {"dim S/Q", 2}, {"dim S/Q'", 2}, {"dim S/(Q+Q')", 0}, {"n", 5}});
  CHECK(sdepth_quotient(intersect(a, b)) == 1);
  CHECK(value_of(thm_lob(a, b)) == 2);
  CHECK(sdepth_ideal(intersect(a, b)) >= 2);

  // same radical
  const auto c = ideal(3, "x1, x2"), d = ideal(3, "x1^2, x2");
  CHECK_FALSE(cor_eg(c, d).applicable());
  CHECK_FALSE(thm_up(c, d).applicable());
  CHECK(value_of(thm_low(c, d)) == static_cast<std::int64_t>(krull_dim_quotient(c)));
}

TEST_CASE("nested pairs are outside the upper bound") {
  // S/((x1)∩(x1,x2)) = S/(x1) has sdepth 1 while the expression gives 0.
  const auto q = ideal(2, "x1"), q2 = ideal(2, "x1, x2");
  const BoundReport up = thm_up(q, q2);
  CHECK_FALSE(up.applicable());
  bool flagged = false;
  for (const auto& h : up.hypotheses) flagged |= !h.satisfied;
  CHECK(flagged);
  CHECK_FALSE(cor_eg(q, q2).applicable());
  CHECK(sdepth_quotient(intersect(q, q2)) == 1);
  // the lower bound still holds there
  CHECK(value_of(thm_low(q, q2)) == 0);
}

TEST_CASE("two facets") {
  CHECK(value_of(cor_facets(3, 3, 1)) == 2);
  CHECK(value_of(cor_facets(1, 1, 0)) == 1);
  CHECK_FALSE(cor_facets(2, 2, 2).applicable());
  CHECK_FALSE(cor_facets(3, 2, 2).applicable());
  CHECK_THROWS_AS(cor_facets(2, 3, 3), InvalidArgument);

  // F = {1,2,3}, F' = {3,4,5}: K[Δ] = S/(P_F ∩ P_F')
  const auto p = complement_prime(5, {0, 1, 2}), p2 = complement_prime(5, {2, 3, 4});
  CHECK(value_of(cor_eg(p, p2)) == 2);
  CHECK(sdepth_quotient(intersect(p, p2)) == 2);

  // every pair of facet shapes up to five vertices
  for (std::size_t f = 1; f <= 4; ++f) {
    for (std::size_t f2 = 1; f2 <= 4; ++f2) {
      for (std::size_t o = 0; o < std::min(f, f2); ++o) {
        const std::size_t n = f + f2 - o;
        if (n > 5) continue;
        std::vector<Monomial> a, b;
        for (std::size_t j = f; j < n; ++j) a.push_back(Monomial::variable(n, j));
        for (std::size_t j = 0; j < f - o; ++j) b.push_back(Monomial::variable(n, j));
        const auto pa = MonomialIdeal::from_generators(RingContext(n), a);
        const auto pb = MonomialIdeal::from_generators(RingContext(n), b);
        REQUIRE(static_cast<std::size_t>(value_of(cor_facets(f, f2, o))) == sdepth_quotient(intersect(pa, pb)));
      }
    }
  }
}

TEST_CASE("layout bounds against the generator-count bound") {
  const auto r1 = ideal(8, "x1"), rest1 = ideal(8, "x2, x3, x4, x5, x6, x7, x8");
  CHECK(value_of(lemma_ea(r1, rest1)) == 5);
  CHECK(value_of(ky_o_bound(intersect(r1, rest1))) == 5);

  const auto r2 = ideal(8, "x1, x2"), rest2 = ideal(8, "x3, x4, x5, x6, x7, x8");
  CHECK(value_of(lemma_ea(r2, rest2)) == 4);
  CHECK(value_of(ky_o_bound(intersect(r2, rest2))) == 2);
  CHECK(ky_o_bound(intersect(r2, rest2)).inputs ==
        std::vector<std::pair<std::string, std::int64_t>>{{"n", 8}, {"|G(I)|", 12}});

  CHECK(value_of(ky_o_bound(ideal(3, "x1*x2^2"))) == 3);

  // overlapping supports: ea needs t = r
  const auto a = ideal(4, "x1, x2"), b = ideal(4, "x2, x3, x4");
  CHECK_FALSE(lemma_ea(a, b).applicable());
  CHECK(lemma_lb(a, b).applicable());
  // lb needs the supports to cover the ring
  CHECK_FALSE(lemma_lb(ideal(4, "x1"), ideal(4, "x2")).applicable());
  CHECK(value_of(lemma_lob(ideal(4, "x1"), ideal(4, "x2"))) == 2 + 1 + 1);
}

TEST_CASE("same-radical remark") {
  CHECK(value_of(remark_tr(ideal(2, "x1"), ideal(2, "x1^2"))) == 2);
  CHECK(sdepth_ideal(intersect(ideal(2, "x1"), ideal(2, "x1^2"))) == 2);
  CHECK(value_of(remark_tr(ideal(2, "x1, x2"), ideal(2, "x1^2, x2^2"))) == 1);
  CHECK_FALSE(remark_tr(ideal(2, "x1"), ideal(2, "x2")).applicable());
}

TEST_CASE("triples") {
  const auto q1 = ideal(3, "x1"), q2 = ideal(3, "x2"), q3 = ideal(3, "x3");
  const BoundReport l3 = lemma_3(q1, q2, q3);
  CHECK(value_of(l3) == 2);
  CHECK(l3.target == "(Q2∩Q3)/(Q1∩Q2∩Q3)");
  CHECK(sdepth_module(intersect(q2, q3), intersect(intersect(q1, q2), q3)) >= 2);
  // Q1+Q2+Q3 is the maximal ideal
  CHECK(value_of(prop_s31(q1, q2, q3)) <= static_cast<std::int64_t>(sdepth_quotient(intersect(intersect(q1, q2), q3))));
  CHECK_FALSE(prop_s31(ideal(4, "x1"), ideal(4, "x2"), ideal(4, "x3")).applicable());

  const auto a = ideal(3, "x1, x2^2"), b = ideal(3, "x2, x3"), c = ideal(3, "x1^2, x3^2");
  const BoundReport s31 = prop_s31(a, b, c);
  REQUIRE(s31.applicable());
  CHECK(sdepth_quotient(intersect(intersect(a, b), c)) >= static_cast<std::size_t>(*s31.value));

  const auto triple = triple_bounds(a, b, c);
  REQUIRE(triple.size() == 3);
  CHECK(triple[0].name == "lemma_3");
  CHECK(triple[1].name == "prop_s31");
  CHECK(triple[2].name == "ky_o");
}

TEST_CASE("conjecture predicates") {
  const auto i = intersect(ideal(2, "x1"), ideal(2, "x1^2, x2"));
  const PredicateOutcome c = check_conjecture_ideal(i);
  CHECK(c.lhs == 1);
  CHECK(c.rhs == 1);
  CHECK(c.holds);

  const PredicateOutcome s3 =
      check_conjecture_quotient(intersect(testing_support::six_var_q(), testing_support::six_var_q2()));
  CHECK(s3.lhs == 1);
  CHECK(s3.rhs == 1);
  CHECK(s3.holds);

  const auto t = intersect(intersect(ideal(3, "x1"), ideal(3, "x2")), ideal(3, "x3"));
  CHECK(check_conjecture_quotient(t).holds);
  CHECK(check_question_as(i).holds);

  CHECK_THROWS_AS(check_question_as(MonomialIdeal::zero(RingContext(2))), HypothesisError);
  CHECK_THROWS_AS(check_conjecture_ideal(MonomialIdeal::unit(RingContext(2))), HypothesisError);
}

TEST_CASE("pair bounds come in a fixed order") {
  const auto bounds = pair_bounds(ideal(3, "x1, x2"), ideal(3, "x2^2, x3"));
  std::vector<std::string> names;
  for (const auto& b : bounds) names.push_back(b.name);
  CHECK(names == std::vector<std::string>{"thm_low", "thm_up", "cor_eg", "prop_low", "lemma_ea", "lemma_lb",
                                          "lemma_lob", "thm_lob", "remark_tr", "ky_o"});
  for (const auto& b : bounds) {
    bool all = true;
    for (const auto& h : b.hypotheses) all &= h.satisfied;
    CHECK_MESSAGE(b.applicable() == all, b.name);
  }
}

// Every irreducible pair in up to three variables with exponents up to 2.
TEST_CASE("exhaustive sweep of irreducible pairs") {
  std::size_t exact_checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ideals = all_irreducible(n, 2);
    for (const auto& q : ideals) {
      for (const auto& q2 : ideals) {
        const auto both = intersect(q, q2);
        const auto s = static_cast<std::int64_t>(sdepth_quotient(both));
        const auto si = static_cast<std::int64_t>(sdepth_ideal(both));
        INFO(to_string(q), " and ", to_string(q2));
        REQUIRE(value_of(thm_low(q, q2)) <= s);
        const BoundReport up = thm_up(q, q2);
        if (up.applicable()) REQUIRE(*up.value >= s);
        const BoundReport eg = cor_eg(q, q2);
        if (eg.applicable()) {
          REQUIRE(*eg.value == s);
          ++exact_checked;
        }
        REQUIRE(value_of(thm_lob(q, q2)) <= si);
        REQUIRE(value_of(lemma_lob(q, q2)) <= si);
        for (const auto& b : {lemma_ea(q, q2), lemma_lb(q, q2), remark_tr(q, q2), prop_low(q, q2)}) {
          if (!b.applicable()) continue;
          REQUIRE_MESSAGE(*b.value <= (b.target == "Q∩Q'" ? si : s), b.name);
        }
        REQUIRE(value_of(ky_o_bound(both)) <= si);
        REQUIRE(check_question_as(both).holds);
        REQUIRE(check_conjecture_ideal(both).holds);
        REQUIRE(check_conjecture_quotient(both).holds);
      }
    }
  }
  CHECK(exact_checked > 100);
}

TEST_CASE("random primary pairs respect the colon-ideal bound") {
  Rng rng(606);
  int applicable = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = rng.uniform(2, 4);
    const auto q = random_primary(rng, n, 2), q2 = random_primary(rng, n, 2);
    const auto s = static_cast<std::int64_t>(sdepth_quotient(intersect(q, q2)));
    const BoundReport low = prop_low(q, q2);
    if (low.applicable()) {
      ++applicable;
      REQUIRE(*low.value <= s);
    }
    const BoundReport up = thm_up(q, q2);
    if (up.applicable()) REQUIRE(*up.value >= s);
  }
  CHECK(applicable > 10);
}

TEST_CASE("random irreducible triples") {
  Rng rng(3030);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.uniform(2, 4);
    const auto q1 = random_irreducible(rng, n, 2), q2 = random_irreducible(rng, n, 2),
               q3 = random_irreducible(rng, n, 2);
    const auto all = intersect(intersect(q1, q2), q3);
    INFO(to_string(q1), " / ", to_string(q2), " / ", to_string(q3));
    REQUIRE(check_conjecture_quotient(all).holds);
    const auto upper = intersect(q2, q3);
    if (!all.contains(upper)) {
      REQUIRE(value_of(lemma_3(q1, q2, q3)) <= static_cast<std::int64_t>(sdepth_module(upper, all)));
    }
    const BoundReport s31 = prop_s31(q1, q2, q3);
    if (s31.applicable()) REQUIRE(*s31.value <= static_cast<std::int64_t>(sdepth_quotient(all)));
  }
}
