#include "doctest.h"

#include <limits>
#include <random>

#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/error.hpp"
#include "sdepthkit/io.hpp"
#include "sdepthkit/poset.hpp"
#include "support.hpp"

using namespace sdepthkit;
using testing_support::ideal;

TEST_CASE("ideal grammar") {
  const RingContext r6(6);
  const auto q = parse_ideal("x1^2, x2^2, x3^2, x4^2, x1*x2*x4, x1*x3*x4", r6);
  CHECK(q.generators().size() == 6);
  CHECK(is_primary(q));
  CHECK(parse_ideal("0", r6).is_zero());
  CHECK(parse_ideal("  0 ", r6).is_zero());
  CHECK(parse_ideal(" x1 ^ 2 *x2,x3", r6) == parse_ideal("x1^2*x2, x3", r6));
  // repeated factors multiply
  CHECK(parse_ideal("x1*x1^2", r6) == parse_ideal("x1^3", r6));
  // non-minimal input is minimalized
  CHECK(parse_ideal("x1, x1*x2", r6) == parse_ideal("x1", r6));

  const RingContext named({"a", "b"});
  CHECK(to_string(parse_ideal("a*b^2", named)) == "a*b^2");
}

TEST_CASE("ideal grammar errors") {
  const RingContext r3(3);
  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_ideal(text, r3);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
  };
  CHECK(position_of("x1^2 x2") == 5);
  CHECK(position_of("x1,") == 3);
  CHECK(position_of("x1^") == 3);
  CHECK(position_of("x4") == 0);
  CHECK(position_of("x1, y") == 4);
  CHECK(position_of("") == 0);
  CHECK(position_of("1") == 0);
  CHECK(position_of("x1^99999999999") == 3);
  CHECK(position_of("x1^65536*x1^65536") == 0);
  CHECK_THROWS_AS(parse_ideal("0, x1", r3), ParseError);
  CHECK_NOTHROW(parse_ideal("x1^65536", r3));
}

TEST_CASE("monomial grammar") {
  const RingContext r2(2);
  CHECK(parse_monomial("1", r2).is_one());
  CHECK(parse_monomial("x2^3*x1", r2) == Monomial{1, 3});
  CHECK_THROWS_AS(parse_monomial("x1, x2", r2), ParseError);
}

TEST_CASE("decomposition text round trip") {
  const auto i = ideal(3, "x1*x2, x3^2");
  const SdepthResult r = compute_sdepth(Target::quotient(i));
  const std::string text = format_decomposition(r.decomposition);
  const auto spaces = parse_decomposition(text, i.ring());
  CHECK(spaces == r.decomposition.spaces);
  const StanleyDecomposition again{Target::quotient(i), spaces};
  CHECK(format_decomposition(again) == text);
}

TEST_CASE("decomposition text details") {
  const RingContext r3(3);
  const auto spaces = parse_decomposition("# header\n\n1 ;\n  x1^2*x3 ; x3 , x1\r\nx2;x2\n", r3);
  REQUIRE(spaces.size() == 3);
  CHECK(spaces[0].u.is_one());
  CHECK(spaces[0].z.empty());
  CHECK(spaces[1].z == VarSet(0b101));
  CHECK(spaces[2].z == VarSet(0b010));

  const StanleyDecomposition d{Target::quotient(ideal(3, "x1")), spaces};
  CHECK(format_decomposition(d) == "1 ;\nx1^2*x3 ; x1,x3\nx2 ; x2\n");

  CHECK_THROWS_AS(parse_decomposition("x1 x1\n", r3), ParseError);
  CHECK_THROWS_AS(parse_decomposition("x1 ; x1, x1\n", r3), ParseError);
  CHECK_THROWS_AS(parse_decomposition("x1 ; x9\n", r3), ParseError);
  CHECK_THROWS_AS(parse_decomposition("x1 ; x2 x3\n", r3), ParseError);
}

TEST_CASE("rng draws") {
  // The engine is the standard one; its first output for seed 42 is fixed by
  // the definition of mt19937_64.
  Rng rng(42);
  CHECK(rng.next() == 13930160852258120406ULL);

  // uniform() is rejection sampling on raw draws; re-derive it by hand.
  std::mt19937_64 raw(7);
  Rng mine(7);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t range = 6;
    std::uint64_t x;
    do {
      x = raw();
    } while (x >= max - max % range);
    REQUIRE(mine.uniform(1, 6) == 1 + x % range);
  }
  Rng edge(1);
  CHECK(edge.uniform(5, 5) == 5);
  CHECK_THROWS_AS(edge.uniform(6, 5), InvalidArgument);
  CHECK(derive_seed(7, 3) != derive_seed(7, 4));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("random generators") {
  // regression fixture, pinned on first run
  Rng fixture(42);
  CHECK(to_string(random_irreducible(fixture, 3, 2)) == "x1, x2, x3");

  Rng one(5);
  for (int k = 0; k < 20; ++k) {
    const auto q = random_irreducible(one, 1, 3);
    REQUIRE(q.generators().size() == 1);
    REQUIRE(q.generators()[0].support() == VarSet(1));
  }

  Rng rng(3);
  std::vector<int> support_hits(8, 0);
  for (int k = 0; k < 7000; ++k) {
    const auto q = random_irreducible(rng, 3, 2);
    REQUIRE(is_irreducible(q));
    REQUIRE_FALSE(q.is_zero());
    ++support_hits[q.support().bits()];
    for (const auto& g : q.generators()) REQUIRE(g.degree() <= 2);
  }
  CHECK(support_hits[0] == 0);
  // seven non-empty supports, about 1000 each
  for (int s = 1; s < 8; ++s) CHECK(support_hits[s] > 850);
  for (int s = 1; s < 8; ++s) CHECK(support_hits[s] < 1150);
}
