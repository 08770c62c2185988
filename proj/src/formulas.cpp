#include "sdepthkit/formulas.hpp"

#include <algorithm>
#include <set>

#include "sdepthkit/error.hpp"
#include "sdepthkit/poset.hpp"

namespace sdepthkit {

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kExact:
      return "exact";
  }
  return "unknown";
}

namespace {

using Int = std::int64_t;

Int ceil_half(Int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }
Int floor_half(Int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

bool nonzero_proper(const MonomialIdeal& i) { return !i.is_zero() && !i.is_unit(); }
bool irreducible_ok(const MonomialIdeal& i) { return nonzero_proper(i) && is_irreducible(i); }
bool primary_ok(const MonomialIdeal& i) { return nonzero_proper(i) && is_primary(i); }

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw InvalidArgument("ideals live in rings with different numbers of variables");
}

Int dim(const MonomialIdeal& i) { return static_cast<Int>(krull_dim_quotient(i)); }

class ReportBuilder {
 public:
  ReportBuilder(std::string name, BoundKind kind, std::string target) {
    report_.name = std::move(name);
    report_.kind = kind;
    report_.target = std::move(target);
  }

  ReportBuilder& require(std::string description, bool ok) {
    report_.hypotheses.push_back({std::move(description), ok});
    return *this;
  }
  ReportBuilder& input(std::string key, Int value) {
    report_.inputs.emplace_back(std::move(key), value);
    return *this;
  }
  bool ok() const {
    return std::all_of(report_.hypotheses.begin(), report_.hypotheses.end(),
                       [](const Hypothesis& h) { return h.satisfied; });
  }
  BoundReport finish(std::optional<Int> value) {
    if (ok()) report_.value = value;
    return std::move(report_);
  }
  BoundReport inapplicable() { return std::move(report_); }

 private:
  BoundReport report_;
};

// The max/min expression shared by the two-ideal quotient bounds.
Int two_component_formula(Int dim_q, Int dim_q2, Int dim_sum) {
  return std::max(std::min(dim_q2, ceil_half(dim_q + dim_sum)),
                  std::min(dim_q, ceil_half(dim_q2 + dim_sum)));
}

BoundReport quotient_pair_bound(std::string name, BoundKind kind, const MonomialIdeal& q,
                                const MonomialIdeal& q2, bool irreducible, bool distinct) {
  require_same_ring(q, q2);
  ReportBuilder b(std::move(name), kind, "S/(Q∩Q')");
  const bool q_ok = irreducible ? irreducible_ok(q) : primary_ok(q);
  const bool q2_ok = irreducible ? irreducible_ok(q2) : primary_ok(q2);
  const char* shape = irreducible ? "irreducible" : "primary";
  b.require(std::string("Q is non-zero proper ") + shape, q_ok);
  b.require(std::string("Q' is non-zero proper ") + shape, q2_ok);
  if (distinct && nonzero_proper(q) && nonzero_proper(q2)) {
    b.require("√Q ≠ √Q'", radical(q) != radical(q2));
    b.require("neither of Q, Q' contains the other", !q.contains(q2) && !q2.contains(q));
  }
  if (!b.ok()) return b.inapplicable();
  const Int dq = dim(q), dq2 = dim(q2), ds = dim(sum(q, q2));
  b.input("dim S/Q", dq).input("dim S/Q'", dq2).input("dim S/(Q+Q')", ds).input("n", static_cast<Int>(q.num_vars()));
  return b.finish(two_component_formula(dq, dq2, ds));
}

// Shared prelude of the layout-based ideal bounds.
struct PairLayout {
  bool ok = false;
  SupportLayout lay;
};

PairLayout irreducible_layout(ReportBuilder& b, const MonomialIdeal& q, const MonomialIdeal& q2) {
  require_same_ring(q, q2);
  b.require("Q is non-zero proper irreducible", irreducible_ok(q));
  b.require("Q' is non-zero proper irreducible", irreducible_ok(q2));
  if (!b.ok()) return {};
  PairLayout out{true, layout(q, q2)};
  b.input("n", static_cast<Int>(out.lay.n))
      .input("r", static_cast<Int>(out.lay.r))
      .input("t", static_cast<Int>(out.lay.t))
      .input("p", static_cast<Int>(out.lay.p));
  return out;
}

}  // namespace

BoundReport thm_low(const MonomialIdeal& q, const MonomialIdeal& q2) {
  return quotient_pair_bound("thm_low", BoundKind::kLower, q, q2, true, false);
}

BoundReport thm_up(const MonomialIdeal& q, const MonomialIdeal& q2) {
  return quotient_pair_bound("thm_up", BoundKind::kUpper, q, q2, false, true);
}

BoundReport cor_eg(const MonomialIdeal& q, const MonomialIdeal& q2) {
  return quotient_pair_bound("cor_eg", BoundKind::kExact, q, q2, true, true);
}

BoundReport prop_low(const MonomialIdeal& q, const MonomialIdeal& q2, const EngineOptions& options) {
  require_same_ring(q, q2);
  ReportBuilder b("prop_low", BoundKind::kLower, "S/(Q∩Q')");
  b.require("Q is non-zero proper primary", primary_ok(q));
  b.require("Q' is non-zero proper primary", primary_ok(q2));
  if (!b.ok()) return b.inapplicable();
  b.require("√Q ≠ √Q'", radical(q) != radical(q2));
  const SupportLayout lay = layout(q, q2);
  b.require("supp √Q ∪ supp √Q' covers every variable", lay.p == lay.n);
  if (!b.ok()) return b.inapplicable();

  const Int n = static_cast<Int>(lay.n), r = static_cast<Int>(lay.r), t = static_cast<Int>(lay.t);
  b.input("n", n).input("r", r).input("t", t).input("p", static_cast<Int>(lay.p));
  const VarSet first = lay.to_original(lay.only_first());
  const VarSet middle = lay.to_original(lay.overlap());
  const VarSet last = lay.to_original(lay.only_second());

  // min over monomials v of K[middle] outside `outside_of` of
  // sdepth((ideal : v) ∩ K[block]); v = 1 gives ideal ∩ K[block] itself.
  auto colon_minimum = [&](const MonomialIdeal& ideal, const MonomialIdeal& outside_of, VarSet block) {
    const Monomial cap = outside_of.exponent_bound();
    const auto vars = middle.indices();
    std::set<std::vector<Monomial>> seen;
    Int best = n;
    std::vector<Exponent> v(lay.n, 0);
    for (;;) {
      Monomial mv(v);
      if (!outside_of.contains(mv)) {
        MonomialIdeal piece = restrict_to(colon(ideal, mv), block);
        if (seen.insert(piece.generators()).second) {
          best = std::min<Int>(best, static_cast<Int>(sdepth_ideal(piece, options)));
        }
      }
      std::size_t k = vars.size();
      while (k-- > 0) {
        const std::size_t j = vars[k];
        if (v[j] + 1 < std::max<Exponent>(cap[j], 1)) {
          ++v[j];
          break;
        }
        v[j] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    return best;
  };

  // A term whose constant is 0 is 0; its ring K[∅] carries no ideal.
  const Int term_first = (r == 0 || t == n) ? 0 : std::min(r, colon_minimum(q2, q2, last));
  const Int term_second = (n - t == 0 || r == 0) ? 0 : std::min(n - t, colon_minimum(q, q, first));
  b.input("term via Q'", term_first).input("term via Q", term_second);
  return b.finish(std::max(term_first, term_second));
}

BoundReport cor_facets(std::size_t facet, std::size_t other_facet, std::size_t overlap) {
  if (overlap > std::min(facet, other_facet)) {
    throw InvalidArgument("the facets cannot share more vertices than the smaller one has");
  }
  ReportBuilder b("cor_facets", BoundKind::kExact, "K[Δ]");
  b.require("the two facets are distinct and neither contains the other",
            overlap < facet && overlap < other_facet);
  const Int f = static_cast<Int>(facet), f2 = static_cast<Int>(other_facet), o = static_cast<Int>(overlap);
  b.input("|F|", f).input("|F'|", f2).input("|F∩F'|", o);
  return b.finish(two_component_formula(f, f2, o));
}

BoundReport lemma_ea(const MonomialIdeal& q, const MonomialIdeal& q2) {
  ReportBuilder b("lemma_ea", BoundKind::kLower, "Q∩Q'");
  auto pl = irreducible_layout(b, q, q2);
  if (!pl.ok) return b.inapplicable();
  const auto& l = pl.lay;
  b.require("supports are disjoint (t = r)", l.t == l.r);
  b.require("supports cover every variable (p = n)", l.p == l.n);
  const Int r = static_cast<Int>(l.r), n = static_cast<Int>(l.n);
  return b.finish(ceil_half(r) + ceil_half(n - r));
}

BoundReport lemma_lb(const MonomialIdeal& q, const MonomialIdeal& q2) {
  ReportBuilder b("lemma_lb", BoundKind::kLower, "Q∩Q'");
  auto pl = irreducible_layout(b, q, q2);
  if (!pl.ok) return b.inapplicable();
  const auto& l = pl.lay;
  b.require("supports cover every variable (p = n)", l.p == l.n);
  const Int r = static_cast<Int>(l.r), t = static_cast<Int>(l.t), n = static_cast<Int>(l.n);
  return b.finish(ceil_half(r) + ceil_half(n - t));
}

BoundReport lemma_lob(const MonomialIdeal& q, const MonomialIdeal& q2) {
  ReportBuilder b("lemma_lob", BoundKind::kLower, "Q∩Q'");
  auto pl = irreducible_layout(b, q, q2);
  if (!pl.ok) return b.inapplicable();
  const auto& l = pl.lay;
  const Int r = static_cast<Int>(l.r), t = static_cast<Int>(l.t), p = static_cast<Int>(l.p),
            n = static_cast<Int>(l.n);
  return b.finish(n - p + ceil_half(r) + ceil_half(p - t));
}

BoundReport thm_lob(const MonomialIdeal& q, const MonomialIdeal& q2) {
  require_same_ring(q, q2);
  ReportBuilder b("thm_lob", BoundKind::kLower, "Q∩Q'");
  b.require("Q is non-zero proper irreducible", irreducible_ok(q));
  b.require("Q' is non-zero proper irreducible", irreducible_ok(q2));
  if (!b.ok()) return b.inapplicable();
  const Int dq = dim(q), dq2 = dim(q2);
  b.input("dim S/Q", dq).input("dim S/Q'", dq2).input("dim S/(Q+Q')", dim(sum(q, q2)));
  return b.finish(ceil_half(dq2 + dq));
}

BoundReport remark_tr(const MonomialIdeal& q, const MonomialIdeal& q2) {
  require_same_ring(q, q2);
  ReportBuilder b("remark_tr", BoundKind::kLower, "Q∩Q'");
  b.require("Q is non-zero proper irreducible", irreducible_ok(q));
  b.require("Q' is non-zero proper irreducible", irreducible_ok(q2));
  if (!b.ok()) return b.inapplicable();
  b.require("√Q = √Q'", radical(q) == radical(q2));
  const Int dq = dim(q);
  b.input("dim S/Q", dq);
  return b.finish(1 + dq);
}

BoundReport ky_o_bound(const MonomialIdeal& ideal) {
  ReportBuilder b("ky_o", BoundKind::kLower, "I");
  b.require("I is non-zero", !ideal.is_zero());
  const Int n = static_cast<Int>(ideal.num_vars());
  const Int gens = static_cast<Int>(ideal.generators().size());
  b.input("n", n).input("|G(I)|", gens);
  return b.finish(n - floor_half(gens));
}

BoundReport lemma_3(const MonomialIdeal& q1, const MonomialIdeal& q2, const MonomialIdeal& q3) {
  require_same_ring(q1, q2);
  require_same_ring(q1, q3);
  ReportBuilder b("lemma_3", BoundKind::kLower, "(Q2∩Q3)/(Q1∩Q2∩Q3)");
  b.require("Q1 is non-zero proper irreducible", irreducible_ok(q1));
  b.require("Q2 is non-zero proper irreducible", irreducible_ok(q2));
  b.require("Q3 is non-zero proper irreducible", irreducible_ok(q3));
  if (!b.ok()) return b.inapplicable();
  const Int d12 = dim(sum(q1, q2)), d13 = dim(sum(q1, q3)), d123 = dim(sum(sum(q1, q2), q3));
  b.input("dim S/(Q1+Q2)", d12).input("dim S/(Q1+Q3)", d13).input("dim S/(Q1+Q2+Q3)", d123);
  return b.finish(d123 + ceil_half(d12 - d123) + ceil_half(d13 - d123));
}

BoundReport prop_s31(const MonomialIdeal& q1, const MonomialIdeal& q2, const MonomialIdeal& q3,
                     const EngineOptions& options) {
  require_same_ring(q1, q2);
  require_same_ring(q1, q3);
  ReportBuilder b("prop_s31", BoundKind::kLower, "S/(Q1∩Q2∩Q3)");
  b.require("Q1 is non-zero proper irreducible", irreducible_ok(q1));
  b.require("Q2 is non-zero proper irreducible", irreducible_ok(q2));
  b.require("Q3 is non-zero proper irreducible", irreducible_ok(q3));
  if (!b.ok()) return b.inapplicable();
  const Int d123 = dim(sum(sum(q1, q2), q3));
  b.require("dim S/(Q1+Q2+Q3) = 0", d123 == 0);
  if (!b.ok()) return b.inapplicable();

  const Int d12 = dim(sum(q1, q2)), d13 = dim(sum(q1, q3)), d23 = dim(sum(q2, q3));
  const Int s23 = static_cast<Int>(sdepth_quotient(intersect(q2, q3), options));
  const Int s13 = static_cast<Int>(sdepth_quotient(intersect(q1, q3), options));
  const Int s12 = static_cast<Int>(sdepth_quotient(intersect(q1, q2), options));
  b.input("dim S/(Q1+Q2)", d12).input("dim S/(Q1+Q3)", d13).input("dim S/(Q2+Q3)", d23);
  b.input("sdepth S/(Q2∩Q3)", s23).input("sdepth S/(Q1∩Q3)", s13).input("sdepth S/(Q1∩Q2)", s12);
  const Int value = std::max({std::min(s23, ceil_half(d12) + ceil_half(d13)),
                              std::min(s13, ceil_half(d12) + ceil_half(d23)),
                              std::min(s12, ceil_half(d23) + ceil_half(d13))});
  return b.finish(value);
}

std::vector<BoundReport> pair_bounds(const MonomialIdeal& q, const MonomialIdeal& q2, const EngineOptions& options) {
  std::vector<BoundReport> out;
  out.push_back(thm_low(q, q2));
  out.push_back(thm_up(q, q2));
  out.push_back(cor_eg(q, q2));
  out.push_back(prop_low(q, q2, options));
  out.push_back(lemma_ea(q, q2));
  out.push_back(lemma_lb(q, q2));
  out.push_back(lemma_lob(q, q2));
  out.push_back(thm_lob(q, q2));
  out.push_back(remark_tr(q, q2));
  out.push_back(ky_o_bound(intersect(q, q2)));
  return out;
}

std::vector<BoundReport> triple_bounds(const MonomialIdeal& q1, const MonomialIdeal& q2, const MonomialIdeal& q3,
                                       const EngineOptions& options) {
  std::vector<BoundReport> out;
  out.push_back(lemma_3(q1, q2, q3));
  out.push_back(prop_s31(q1, q2, q3, options));
  out.push_back(ky_o_bound(intersect(intersect(q1, q2), q3)));
  return out;
}

namespace {

void require_predicate_input(const MonomialIdeal& ideal) {
  if (!nonzero_proper(ideal)) throw HypothesisError("the predicates need a non-zero proper ideal");
}

}  // namespace

PredicateOutcome check_question_as(const MonomialIdeal& ideal, const EngineOptions& options) {
  require_predicate_input(ideal);
  PredicateOutcome out{"question_as", static_cast<Int>(sdepth_ideal(ideal, options)),
                       1 + static_cast<Int>(sdepth_quotient(ideal, options)), false};
  out.holds = out.lhs >= out.rhs;
  return out;
}

PredicateOutcome check_conjecture_ideal(const MonomialIdeal& ideal, const EngineOptions& options,
                                        Characteristic characteristic) {
  require_predicate_input(ideal);
  PredicateOutcome out{"conjecture_ideal", static_cast<Int>(sdepth_ideal(ideal, options)),
                       static_cast<Int>(depth_ideal(ideal, characteristic)), false};
  out.holds = out.lhs >= out.rhs;
  return out;
}

PredicateOutcome check_conjecture_quotient(const MonomialIdeal& ideal, const EngineOptions& options,
                                           Characteristic characteristic) {
  require_predicate_input(ideal);
  PredicateOutcome out{"conjecture_quotient", static_cast<Int>(sdepth_quotient(ideal, options)),
                       static_cast<Int>(depth_quotient(ideal, characteristic)), false};
  out.holds = out.lhs >= out.rhs;
  return out;
}

}  // namespace sdepthkit
