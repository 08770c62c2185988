#include "doctest.h"

#include <string>

#include "oracles.hpp"
#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/error.hpp"
#include "sdepthkit/formulas.hpp"
#include "sdepthkit/io.hpp"
#include "sdepthkit/poset.hpp"
#include "support.hpp"

using namespace sdepthkit;
using testing_support::ideal;
using testing_support::mono;

namespace {

const char* kFourteenSpaces =
    "x1*x4 ; x1,x4,x5\n"
    "x1*x5 ; x1,x2,x5\n"
    "x2*x4 ; x1,x2,x4\n"
    "x2*x5 ; x2,x4,x5\n"
    "x3^2 ; x3,x4,x5\n"
    "x2*x3 ; x2,x3,x4\n"
    "x1*x3 ; x1,x2,x3\n"
    "x1*x3*x4 ; x1,x2,x4,x5\n"
    "x1*x3*x5 ; x1,x3,x5\n"
    "x2*x3*x5 ; x2,x3,x4,x5\n"
    "x1*x2*x4*x5 ; x1,x2,x4,x5\n"
    "x1*x3^2*x4 ; x1,x3,x4,x5\n"
    "x1*x2*x3*x5 ; x1,x2,x3,x5\n"
    "x1*x2*x3^2*x4 ; x1,x2,x3,x4,x5\n";

// Exactly-once coverage checked on a box three steps past every exponent
// involved, wider than the one validate() uses.
bool oracle_valid(const StanleyDecomposition& d) {
  const std::size_t n = d.target.num_vars();
  oracle::Vec cap(n, 0);
  auto widen = [&](const Monomial& m) {
    for (std::size_t j = 0; j < n; ++j) cap[j] = std::max(cap[j], m[j]);
  };
  for (const auto& g : d.target.upper().generators()) widen(g);
  for (const auto& g : d.target.lower().generators()) widen(g);
  for (const auto& s : d.spaces) widen(s.u);
  for (auto& c : cap) c += 3;
  const auto up = oracle::gens_of(d.target.upper()), low = oracle::gens_of(d.target.lower());
  bool ok = true;
  oracle::for_box(cap, [&](const oracle::Vec& a) {
    int count = 0;
    for (const auto& s : d.spaces) {
      bool in = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (a[j] < s.u[j] || (a[j] > s.u[j] && !s.z.contains(j))) in = false;
      }
      count += in;
    }
    const bool member = oracle::member(up, a) && !oracle::member(low, a);
    if (count != (member ? 1 : 0)) ok = false;
  });
  return ok;
}

std::size_t min_z(const StanleyDecomposition& d) {
  std::size_t m = d.target.num_vars();
  for (const auto& s : d.spaces) m = std::min(m, s.z.size());
  return m;
}

// The decomposition of Q'/(Q∩Q') from the lower-bound argument for
// S/(Q∩Q'): one piece u·((Q':u) ∩ K[tail]) for every monomial u in the
// variables of √Q outside Q, the tail being the variables outside √Q.
StanleyDecomposition module_fixture(const MonomialIdeal& q, const MonomialIdeal& q2) {
  const std::size_t n = q.num_vars();
  const VarSet head = q.support();
  const VarSet tail = VarSet::all(n) - head;
  StanleyDecomposition d{Target::module(q2, intersect(q, q2)), {}};
  const Monomial cap = q.exponent_bound();
  const auto vars = head.indices();
  std::vector<Exponent> u(n, 0);
  for (;;) {
    const Monomial mu(u);
    if (!q.contains(mu)) {
      const MonomialIdeal piece = colon(q2, mu);
      if (piece.is_unit()) {
        d.spaces.push_back({mu, tail});
      } else if (!tail.empty()) {
        const MonomialIdeal local = restrict_to(piece, tail);
        if (!local.is_zero()) {
          const SdepthResult r = compute_sdepth(Target::ideal(local));
          const auto pos = tail.indices();
          for (const auto& s : r.decomposition.spaces) {
            std::vector<Exponent> e(n, 0);
            VarSet z;
            for (std::size_t k = 0; k < pos.size(); ++k) {
              e[pos[k]] = s.u[k];
              if (s.z.contains(k)) z.insert(pos[k]);
            }
            d.spaces.push_back({Monomial(e) * mu, z});
          }
        }
      }
    }
    std::size_t k = vars.size();
    while (k-- > 0) {
      if (u[vars[k]] + 1 < cap[vars[k]]) {
        ++u[vars[k]];
        break;
      }
      u[vars[k]] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return d;
}

}  // namespace

TEST_CASE("space membership") {
  const StanleySpace s{mono(3, "x1"), VarSet(0b010)};
  CHECK(space_contains(s, mono(3, "x1*x2^3")));
  CHECK_FALSE(space_contains(s, mono(3, "x1*x3")));
  const StanleySpace one{Monomial(2), VarSet()};
  CHECK(one.contains(Monomial(2)));
  CHECK_FALSE(one.contains(mono(2, "x1")));
}

TEST_CASE("a fourteen-space decomposition of an intersection") {
  const auto q = ideal(5, "x1, x2, x3^2");
  const auto q2 = ideal(5, "x3, x4, x5");
  const auto both = intersect(q, q2);
  const StanleyDecomposition d{Target::ideal(both), parse_decomposition(kFourteenSpaces, both.ring())};
  REQUIRE(d.spaces.size() == 14);
  const ValidationReport r = validate(d);
  CHECK(r.valid);
  CHECK(r.sdepth == std::optional<std::size_t>(3));
  CHECK(sdepth_of(d) == 3);
  CHECK(oracle_valid(d));
  CHECK(format_decomposition(d) == kFourteenSpaces);
}

TEST_CASE("validation verdicts") {
  const RingContext r2(2);
  const StanleyDecomposition whole{Target::quotient(MonomialIdeal::zero(r2)), {{Monomial(2), VarSet::all(2)}}};
  CHECK(validate(whole).valid);

  const auto x1 = ideal(2, "x1");
  const StanleyDecomposition twice{Target::ideal(x1), {{mono(2, "x1"), VarSet(0b01)}, {mono(2, "x1"), VarSet(0b01)}}};
  const ValidationReport overlap = validate(twice);
  CHECK_FALSE(overlap.valid);
  CHECK(overlap.violation == ViolationKind::kOverlap);
  CHECK(overlap.witness == mono(2, "x1"));

  const StanleyDecomposition partial{Target::ideal(x1), {{mono(2, "x1"), VarSet(0b01)}}};
  const ValidationReport gap = validate(partial);
  CHECK(gap.violation == ViolationKind::kGap);
  CHECK(gap.witness == mono(2, "x1*x2"));

  const StanleyDecomposition outside{Target::ideal(x1), {{Monomial(2), VarSet::all(2)}}};
  CHECK(validate(outside).violation == ViolationKind::kOutside);
  CHECK(validate(outside).witness == Monomial(2));

  const StanleyDecomposition point{Target::quotient(ideal(2, "x1, x2")), {{Monomial(2), VarSet()}}};
  CHECK(sdepth_of(point) == 0);
  CHECK_THROWS_AS(sdepth_of(twice), InvalidArgument);
  const StanleyDecomposition empty{Target::ideal(x1), {}};
  CHECK_FALSE(validate(empty).valid);

  const StanleyDecomposition wrong_ring{Target::ideal(x1), {{Monomial(3), VarSet()}}};
  CHECK_THROWS_AS(validate(wrong_ring), InvalidArgument);
}

TEST_CASE("validate agrees with the coverage oracle") {
  Rng rng(8080);
  int valid_seen = 0, invalid_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    MonomialIdeal i = random_ideal(rng, n, 2, 3);
    if (i.is_unit()) continue;
    StanleyDecomposition d = compute_sdepth(Target::quotient(i)).decomposition;
    // perturb most of them
    switch (rng.uniform(0, 3)) {
      case 0:
        break;
      case 1:
        d.spaces.erase(d.spaces.begin() + static_cast<long>(rng.uniform(0, d.spaces.size() - 1)));
        break;
      case 2:
        d.spaces.push_back(d.spaces[rng.uniform(0, d.spaces.size() - 1)]);
        break;
      case 3: {
        auto& s = d.spaces[rng.uniform(0, d.spaces.size() - 1)];
        s.z = VarSet(s.z.bits() ^ (std::uint64_t{1} << rng.uniform(0, n - 1)));
        break;
      }
    }
    const ValidationReport r = validate(d);
    REQUIRE(r.valid == oracle_valid(d));
    if (r.valid) {
      ++valid_seen;
      if (!d.spaces.empty()) REQUIRE(*r.sdepth == min_z(d));
    } else {
      ++invalid_seen;
      // the witness really is a counterexample
      int count = 0;
      for (const auto& s : d.spaces) count += s.contains(*r.witness);
      const bool member = d.target.contains(*r.witness);
      switch (*r.violation) {
        case ViolationKind::kOverlap:
          REQUIRE(count >= 2);
          break;
        case ViolationKind::kGap:
          REQUIRE((member && count == 0));
          break;
        case ViolationKind::kOutside:
          REQUIRE((!member && count >= 1));
          break;
      }
    }
  }
  CHECK(valid_seen > 20);
  CHECK(invalid_seen > 20);
}

TEST_CASE("primary quotient builder") {
  const auto d = build_primary_quotient(ideal(3, "x1^2, x2"));
  REQUIRE(d.spaces.size() == 2);
  CHECK(d.spaces[0] == StanleySpace{Monomial(3), VarSet(0b100)});
  CHECK(d.spaces[1] == StanleySpace{mono(3, "x1"), VarSet(0b100)});
  CHECK(sdepth_of(d) == 1);

  const auto m = build_primary_quotient(ideal(2, "x1, x2"));
  REQUIRE(m.spaces.size() == 1);
  CHECK(m.spaces[0] == StanleySpace{Monomial(2), VarSet()});

  const auto q = testing_support::six_var_q();
  const auto s3 = build_primary_quotient(q);
  CHECK(validate(s3).valid);
  CHECK(sdepth_of(s3) == 2);
  CHECK(sdepth_of(s3) == krull_dim_quotient(q));

  CHECK_THROWS_AS(build_primary_quotient(ideal(2, "x1*x2")), HypothesisError);

  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_primary(rng, rng.uniform(1, 4), 3);
    const auto b = build_primary_quotient(p);
    REQUIRE(validate(b).valid);
    REQUIRE(sdepth_of(b) == krull_dim_quotient(p));
  }
}

TEST_CASE("product builder") {
  const auto a = build_product(ideal(4, "x1, x2"), ideal(4, "x3, x4"));
  CHECK(validate(a).valid);
  CHECK(sdepth_of(a) >= 2);

  const auto b = build_product(ideal(2, "x1"), ideal(2, "x2"));
  REQUIRE(b.spaces.size() == 1);
  CHECK(b.spaces[0] == StanleySpace{mono(2, "x1*x2"), VarSet::all(2)});
  CHECK(sdepth_of(b) == 2);

  const auto big = build_product(ideal(8, "x1"), ideal(8, "x2, x3, x4, x5, x6, x7, x8"));
  CHECK(validate(big).valid);
  CHECK(sdepth_of(big) >= 5);

  CHECK_THROWS_AS(build_product(ideal(2, "x1"), ideal(2, "x1, x2")), HypothesisError);
  CHECK_THROWS_AS(build_product(ideal(2, "x1*x2"), ideal(2, "x2")), HypothesisError);
}

TEST_CASE("split builder") {
  const auto q = ideal(5, "x1, x2, x3^2"), q2 = ideal(5, "x3, x4, x5");
  const auto d = build_split(q, q2);
  CHECK(validate(d).valid);
  CHECK(sdepth_of(d) >= 2);

  const auto e = build_split(ideal(2, "x1"), ideal(2, "x1^2, x2"));
  CHECK(validate(e).valid);
  CHECK(sdepth_of(e) >= 1);

  // no shared variables: same as the product
  const auto f = build_split(ideal(3, "x1^2"), ideal(3, "x2, x3"));
  CHECK(f.spaces == build_product(ideal(3, "x1^2"), ideal(3, "x2, x3")).spaces);
}

TEST_CASE("builders meet the closed-form bounds") {
  Rng rng(2718);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = rng.uniform(2, 5);
    const auto q = random_irreducible(rng, n, 2);
    const auto q2 = random_irreducible(rng, n, 2);
    const auto d = build_split(q, q2);
    REQUIRE(oracle_valid(d));
    const ValidationReport v = validate(d);
    REQUIRE(v.valid);
    REQUIRE(*v.sdepth >= static_cast<std::size_t>(*lemma_lob(q, q2).value));
    const BoundReport lb = lemma_lb(q, q2);
    if (lb.applicable()) REQUIRE(*v.sdepth >= static_cast<std::size_t>(*lb.value));
    if ((q.support() & q2.support()).empty()) {
      const auto p = build_product(q, q2);
      REQUIRE(validate(p).valid);
      const BoundReport ea = lemma_ea(q, q2);
      if (ea.applicable()) REQUIRE(sdepth_of(p) >= static_cast<std::size_t>(*ea.value));
    }
  }
}

TEST_CASE("module decomposition behind the colon-ideal bound") {
  // the six-variable pair, plus random primary pairs whose supports cover the ring
  std::vector<std::pair<MonomialIdeal, MonomialIdeal>> pairs{
      {testing_support::six_var_q(), testing_support::six_var_q2()}};
  Rng rng(1618);
  while (pairs.size() < 40) {
    const std::size_t n = rng.uniform(2, 4);
    auto q = random_primary(rng, n, 2), q2 = random_primary(rng, n, 2);
    if ((q.support() | q2.support()) != VarSet::all(n) || radical(q) == radical(q2)) continue;
    if (q.contains(q2)) continue;  // zero module
    pairs.emplace_back(std::move(q), std::move(q2));
  }
  for (const auto& [q, q2] : pairs) {
    const auto d = module_fixture(q, q2);
    REQUIRE(validate(d).valid);
    REQUIRE(oracle_valid(d));
    // min over v of sdepth((Q':v) ∩ K[tail]); v = 1 included
    const VarSet tail = VarSet::all(q.num_vars()) - q.support();
    if (tail.empty()) continue;
    const VarSet middle = q.support() & q2.support();
    std::size_t bound = q.num_vars();
    const Monomial cap = q2.exponent_bound();
    for (std::uint64_t code = 0;; ++code) {
      std::vector<Exponent> v(q.num_vars(), 0);
      std::uint64_t rest = code;
      for (auto j : middle.indices()) {
        v[j] = static_cast<Exponent>(rest % std::max<Exponent>(cap[j], 1));
        rest /= std::max<Exponent>(cap[j], 1);
      }
      if (rest != 0) break;
      const Monomial mv(v);
      if (q2.contains(mv)) continue;
      bound = std::min(bound, sdepth_ideal(restrict_to(colon(q2, mv), tail)));
    }
    REQUIRE(sdepth_of(d) >= bound);
  }
}
