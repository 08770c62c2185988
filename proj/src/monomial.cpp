#include "sdepthkit/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "sdepthkit/error.hpp"

namespace sdepthkit {

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// RingContext

namespace {

std::vector<std::string> default_names(std::size_t n, std::size_t first = 1) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(first + i));
  return names;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

}  // namespace

RingContext::RingContext(std::size_t n) : RingContext(default_names(n)) {}

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("a ring needs at least one variable");
  if (names_.size() > kMaxVariables) {
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!valid_identifier(name)) throw InvalidArgument("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw InvalidArgument("duplicate variable name '" + name + "'");
  }
}

std::size_t RingContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

RingContext RingContext::subring(VarSet subset) const {
  std::vector<std::string> names;
  for (auto i : subset.indices()) {
    if (i >= names_.size()) throw InvalidArgument("variable subset exceeds the ring");
    names.push_back(names_[i]);
  }
  return RingContext(std::move(names));
}

RingContext RingContext::extended(std::size_t extra) const {
  std::vector<std::string> names = names_;
  std::unordered_set<std::string> taken(names.begin(), names.end());
  std::size_t next = names.size() + 1;
  for (std::size_t k = 0; k < extra; ++k) {
    std::string candidate = "x" + std::to_string(next++);
    while (taken.count(candidate) != 0) candidate = "x" + std::to_string(next++);
    taken.insert(candidate);
    names.push_back(std::move(candidate));
  }
  return RingContext(std::move(names));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_) {
    if (e > kMaxExponent) {
      throw InvalidArgument("exponent " + std::to_string(e) + " exceeds the limit " +
                            std::to_string(kMaxExponent));
    }
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  std::vector<Exponent> e(n, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

VarSet Monomial::support() const {
  VarSet s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s.insert(i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : 0;
  }
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree() const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] != 0 ? 1 : 0;
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const RingContext& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(RingContext ring) : ring_(std::move(ring)) {}

MonomialIdeal MonomialIdeal::from_generators(RingContext ring, std::vector<Monomial> gens) {
  const std::size_t n = ring.num_vars();
  for (const auto& g : gens) {
    if (g.size() != n) {
      throw InvalidArgument("monomial has " + std::to_string(g.size()) +
                            " exponents but the ring has " + std::to_string(n) + " variables");
    }
  }
  // Divisors have smaller degree, so a degree-ascending sweep sees them first.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> minimal;
  for (auto& g : gens) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::sort(minimal.begin(), minimal.end(), std::greater<>{});
  return MonomialIdeal(std::move(ring), std::move(minimal));
}

MonomialIdeal MonomialIdeal::unit(RingContext ring) {
  const std::size_t n = ring.num_vars();
  return MonomialIdeal(std::move(ring), std::vector<Monomial>{Monomial(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != num_vars()) throw InvalidArgument("monomial does not belong to the ring");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

VarSet MonomialIdeal::support() const {
  VarSet s;
  for (const auto& g : gens_) s = s | g.support();
  return s;
}

Monomial MonomialIdeal::exponent_bound() const {
  Monomial bound(num_vars());
  for (const auto& g : gens_) bound = bound.lcm(g);
  return bound;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, ideal.ring());
  }
  return out;
}

// ---------------------------------------------------------------------------
// SupportLayout

VarSet SupportLayout::only_first() const { return VarSet::all(r); }
VarSet SupportLayout::overlap() const { return VarSet::all(t) - VarSet::all(r); }
VarSet SupportLayout::only_second() const { return VarSet::all(p) - VarSet::all(t); }
VarSet SupportLayout::free() const { return VarSet::all(n) - VarSet::all(p); }

VarSet SupportLayout::to_original(VarSet positions) const {
  VarSet out;
  for (auto k : positions.indices()) out.insert(permutation.at(k));
  return out;
}

// ---------------------------------------------------------------------------
// Operations

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw InvalidArgument("ideals live in rings with different numbers of variables");
  }
}

// Smallest number of variables meeting every set. Sets must be non-empty.
std::size_t min_hitting_set(const std::vector<std::uint64_t>& sets, std::uint64_t chosen,
                            std::size_t used, std::size_t best) {
  if (used >= best) return best;
  auto open = std::find_if(sets.begin(), sets.end(),
                           [&](std::uint64_t s) { return (s & chosen) == 0; });
  if (open == sets.end()) return used;
  for (std::uint64_t b = *open; b != 0; b &= b - 1) {
    std::uint64_t bit = b & (~b + 1);
    best = min_hitting_set(sets, chosen | bit, used + 1, best);
  }
  return best;
}

}  // namespace

MonomialIdeal minimalize(const std::vector<Monomial>& gens, const RingContext& ring) {
  return MonomialIdeal::from_generators(ring, gens);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> lcms;
  lcms.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) lcms.push_back(g.lcm(h));
  }
  return MonomialIdeal::from_generators(a.ring(), std::move(lcms));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w) {
  if (w.size() != ideal.num_vars()) throw InvalidArgument("monomial does not belong to the ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.colon(w));
  return MonomialIdeal::from_generators(ideal.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.squarefree());
  return MonomialIdeal::from_generators(ideal.ring(), std::move(gens));
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw HypothesisError(std::string(what) + " is defined here only for non-zero proper ideals");
  }
}

// Variables that occur as a pure power among the generators.
VarSet pure_power_vars(const MonomialIdeal& ideal) {
  VarSet vars;
  for (const auto& g : ideal.generators()) {
    auto s = g.support();
    if (s.size() == 1) vars = vars | s;
  }
  return vars;
}

}  // namespace

bool is_primary(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "is_primary");
  return ideal.support().is_subset_of(pure_power_vars(ideal));
}

bool is_irreducible(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "is_irreducible");
  // Minimal generators are pairwise non-dividing, so at most one per variable.
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.support().size() == 1; });
}

std::size_t krull_dim_quotient(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw HypothesisError("S/I is zero for the unit ideal; its dimension is -infinity");
  const std::size_t n = ideal.num_vars();
  const MonomialIdeal rad = radical(ideal);
  std::vector<std::uint64_t> supports;
  supports.reserve(rad.generators().size());
  for (const auto& g : rad.generators()) supports.push_back(g.support().bits());
  // Small supports first make the branching narrow near the root.
  std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return n - min_hitting_set(supports, 0, 0, n + 1);
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, VarSet subset) {
  RingContext sub = ideal.ring().subring(subset);
  const auto idx = subset.indices();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.support().is_subset_of(subset)) continue;
    std::vector<Exponent> e(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) e[k] = g[idx[k]];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::from_generators(std::move(sub), std::move(gens));
}

MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t extra) {
  RingContext big = ideal.ring().extended(extra);
  std::vector<std::size_t> positions(ideal.num_vars());
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  return embed(ideal, big, positions);
}

MonomialIdeal embed(const MonomialIdeal& ideal, const RingContext& ring,
                    std::span<const std::size_t> positions) {
  if (positions.size() != ideal.num_vars()) throw InvalidArgument("embedding has the wrong arity");
  const std::size_t n = ring.num_vars();
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] >= n) throw InvalidArgument("embedding target out of range");
      e[positions[i]] = g[i];
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

SupportLayout layout(const MonomialIdeal& q, const MonomialIdeal& q2) {
  require_same_ring(q, q2);
  if (q.is_zero() || q2.is_zero()) throw HypothesisError("layout needs non-zero ideals");
  const std::size_t n = q.num_vars();
  const VarSet a = q.support();
  const VarSet b = q2.support();
  SupportLayout out;
  out.n = n;
  for (auto i : (a - b).indices()) out.permutation.push_back(i);
  out.r = out.permutation.size();
  for (auto i : (a & b).indices()) out.permutation.push_back(i);
  out.t = out.permutation.size();
  for (auto i : (b - a).indices()) out.permutation.push_back(i);
  out.p = out.permutation.size();
  for (auto i : (VarSet::all(n) - (a | b)).indices()) out.permutation.push_back(i);
  return out;
}

}  // namespace sdepthkit
