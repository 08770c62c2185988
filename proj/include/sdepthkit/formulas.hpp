#ifndef SDEPTHKIT_FORMULAS_HPP
#define SDEPTHKIT_FORMULAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdepthkit/homology.hpp"
#include "sdepthkit/monomial.hpp"
#include "sdepthkit/options.hpp"

namespace sdepthkit {

enum class BoundKind { kLower, kUpper, kExact };

const char* to_string(BoundKind kind);

struct Hypothesis {
  std::string description;
  bool satisfied = false;
};

// A closed-form Stanley-depth bound. `value` is present exactly when every
// hypothesis holds; an inapplicable bound never carries a default value.
struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::kLower;
  // What the bound is about, e.g. "S/(Q∩Q')" or "Q∩Q'".
  std::string target;
  std::optional<std::int64_t> value;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::pair<std::string, std::int64_t>> inputs;

  bool applicable() const { return value.has_value(); }
};

// Pairs. Q and Q' share a ring; all dimensions are computed, never supplied.

// max{min{dim S/Q', ⌈(dim S/Q + dim S/(Q+Q'))/2⌉}, min{dim S/Q, ⌈(dim S/Q' + dim S/(Q+Q'))/2⌉}}
// as a lower bound for sdepth S/(Q∩Q'), Q and Q' irreducible.
BoundReport thm_low(const MonomialIdeal& q, const MonomialIdeal& q2);
// The same expression as an upper bound, Q and Q' primary with different
// radicals. Nested pairs (Q ⊆ Q') are excluded: there S/(Q∩Q') = S/Q and the
// expression undercounts, e.g. Q = (x1), Q' = (x1, x2).
BoundReport thm_up(const MonomialIdeal& q, const MonomialIdeal& q2);
// The same expression as the exact value, Q and Q' irreducible with
// different radicals, neither containing the other.
BoundReport cor_eg(const MonomialIdeal& q, const MonomialIdeal& q2);

// Lower bound for sdepth S/(Q∩Q') from the Stanley depths of restricted
// colon ideals; Q, Q' primary with different radicals whose supports cover
// all variables. Runs the exact engine on every distinct colon ideal.
BoundReport prop_low(const MonomialIdeal& q, const MonomialIdeal& q2, const EngineOptions& options = {});

// sdepth of the Stanley-Reisner ring of a complex with exactly two facets.
BoundReport cor_facets(std::size_t facet, std::size_t other_facet, std::size_t overlap);

// Lower bounds for sdepth(Q∩Q') from the support layout (n, r, t, p).
BoundReport lemma_ea(const MonomialIdeal& q, const MonomialIdeal& q2);   // t = r, p = n
BoundReport lemma_lb(const MonomialIdeal& q, const MonomialIdeal& q2);   // p = n
BoundReport lemma_lob(const MonomialIdeal& q, const MonomialIdeal& q2);  // n-p+⌈r/2⌉+⌈(p-t)/2⌉
BoundReport thm_lob(const MonomialIdeal& q, const MonomialIdeal& q2);    // ⌈(dim S/Q' + dim S/Q)/2⌉
BoundReport remark_tr(const MonomialIdeal& q, const MonomialIdeal& q2);  // same radical: 1 + dim S/Q

// n - ⌊|G(I)|/2⌋
BoundReport ky_o_bound(const MonomialIdeal& ideal);

// Triples.
// Lower bound for sdepth (Q2∩Q3)/(Q1∩Q2∩Q3).
BoundReport lemma_3(const MonomialIdeal& q1, const MonomialIdeal& q2, const MonomialIdeal& q3);
// Lower bound for sdepth S/(Q1∩Q2∩Q3) when dim S/(Q1+Q2+Q3) = 0; runs the
// engine on the three pairwise intersections.
BoundReport prop_s31(const MonomialIdeal& q1, const MonomialIdeal& q2, const MonomialIdeal& q3,
                     const EngineOptions& options = {});

// Every bound that takes a pair, in a fixed order.
std::vector<BoundReport> pair_bounds(const MonomialIdeal& q, const MonomialIdeal& q2,
                                     const EngineOptions& options = {});
std::vector<BoundReport> triple_bounds(const MonomialIdeal& q1, const MonomialIdeal& q2,
                                       const MonomialIdeal& q3, const EngineOptions& options = {});

// lhs >= rhs, both computed exactly.
struct PredicateOutcome {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

// sdepth I >= 1 + sdepth S/I
PredicateOutcome check_question_as(const MonomialIdeal& ideal, const EngineOptions& options = {});
// sdepth I >= depth I
PredicateOutcome check_conjecture_ideal(const MonomialIdeal& ideal, const EngineOptions& options = {},
                                        Characteristic characteristic = 0);
// sdepth S/I >= depth S/I
PredicateOutcome check_conjecture_quotient(const MonomialIdeal& ideal, const EngineOptions& options = {},
                                           Characteristic characteristic = 0);

}  // namespace sdepthkit

#endif  // SDEPTHKIT_FORMULAS_HPP
