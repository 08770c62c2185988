#include "sdepthkit/decomposition.hpp"

#include <algorithm>

#include "sdepthkit/error.hpp"
#include "sdepthkit/poset.hpp"

namespace sdepthkit {

Target Target::ideal(MonomialIdeal i) {
  MonomialIdeal zero = MonomialIdeal::zero(i.ring());
  return Target(std::move(i), std::move(zero));
}

Target Target::quotient(MonomialIdeal i) {
  MonomialIdeal unit = MonomialIdeal::unit(i.ring());
  return Target(std::move(unit), std::move(i));
}

Target Target::module(MonomialIdeal upper, MonomialIdeal lower) {
  if (upper.num_vars() != lower.num_vars()) {
    throw InvalidArgument("module ideals live in rings with different numbers of variables");
  }
  if (!upper.contains(lower)) throw InvalidArgument("the submodule ideal is not contained in the ambient ideal");
  return Target(std::move(upper), std::move(lower));
}

bool StanleySpace::contains(const Monomial& m) const {
  if (m.size() != u.size() || !u.divides(m)) return false;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] != u[j] && !z.contains(j)) return false;
  }
  return true;
}

bool space_contains(const StanleySpace& space, const Monomial& m) { return space.contains(m); }

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOverlap:
      return "overlap";
    case ViolationKind::kGap:
      return "gap";
    case ViolationKind::kOutside:
      return "outside";
  }
  return "unknown";
}

namespace {

// Validation boxes are far smaller than search boxes; this only guards
// against absurd exponents.
constexpr std::uint64_t kMaxValidationBox = std::uint64_t{1} << 26;

}  // namespace

ValidationReport validate(const StanleyDecomposition& d) {
  const std::size_t n = d.target.num_vars();
  Monomial g = d.target.upper().exponent_bound().lcm(d.target.lower().exponent_bound());
  for (const auto& space : d.spaces) {
    if (space.u.size() != n) throw InvalidArgument("Stanley space monomial does not belong to the ring");
    if (!space.z.is_subset_of(VarSet::all(n))) throw InvalidArgument("Stanley space uses unknown variables");
    g = g.lcm(space.u);
  }

  // box [0, g+1]^n, last coordinate least significant
  std::vector<std::uint64_t> strides(n, 1);
  std::uint64_t box = 1;
  for (std::size_t j = n; j-- > 0;) {
    strides[j] = box;
    box *= std::uint64_t{g[j]} + 2;
    if (box > kMaxValidationBox) throw ResourceError("validation box is too large");
  }

  // covering count per box point, saturating at 2
  std::vector<std::uint8_t> count(box, 0);
  for (const auto& space : d.spaces) {
    const auto free = space.z.indices();
    std::vector<Exponent> a(space.u.exponents().begin(), space.u.exponents().end());
    for (;;) {
      std::uint64_t index = 0;
      for (std::size_t j = 0; j < n; ++j) index += a[j] * strides[j];
      if (count[index] < 2) ++count[index];
      std::size_t k = free.size();
      while (k-- > 0) {
        const std::size_t j = free[k];
        if (a[j] < g[j] + 1) {
          ++a[j];
          break;
        }
        a[j] = space.u[j];
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }

  ValidationReport report;
  std::vector<Exponent> a(n, 0);
  for (std::uint64_t index = 0; index < box; ++index) {
    Monomial m(a);
    const bool inside = d.target.contains(m);
    std::optional<ViolationKind> kind;
    if (count[index] > 1) {
      kind = ViolationKind::kOverlap;
    } else if (count[index] == 1 && !inside) {
      kind = ViolationKind::kOutside;
    } else if (count[index] == 0 && inside) {
      kind = ViolationKind::kGap;
    }
    if (kind) {
      report.violation = kind;
      report.witness = std::move(m);
      return report;
    }
    for (std::size_t j = n; j-- > 0;) {
      if (a[j] < g[j] + 1) {
        ++a[j];
        break;
      }
      a[j] = 0;
    }
  }
  report.valid = true;
  if (!d.spaces.empty()) {
    std::size_t depth = n;
    for (const auto& space : d.spaces) depth = std::min(depth, space.z.size());
    report.sdepth = depth;
  }
  return report;
}

std::size_t sdepth_of(const StanleyDecomposition& d) {
  const ValidationReport report = validate(d);
  if (!report.valid) {
    throw InvalidArgument(std::string("not a Stanley decomposition of its target (") +
                          to_string(*report.violation) + " at " +
                          to_string(*report.witness, d.target.ring()) + ")");
  }
  if (!report.sdepth) throw InvalidArgument("the empty decomposition has no Stanley depth");
  return *report.sdepth;
}

// ---------------------------------------------------------------------------
// Builders

StanleyDecomposition build_primary_quotient(const MonomialIdeal& q) {
  const std::size_t n = q.num_vars();
  StanleyDecomposition d{Target::quotient(q), {}};
  if (q.is_zero()) {
    d.spaces.push_back({Monomial(n), VarSet::all(n)});
    return d;
  }
  if (!is_primary(q)) throw HypothesisError("build_primary_quotient needs a primary ideal");

  const VarSet support = q.support();
  const VarSet z = VarSet::all(n) - support;
  // Pure powers x_j^{e_j} bound every surviving u.
  std::vector<Exponent> limit(n, 0);
  for (const auto& gen : q.generators()) {
    if (gen.support().size() == 1) {
      const std::size_t j = gen.support().indices().front();
      limit[j] = gen[j];
    }
  }
  const auto vars = support.indices();
  std::vector<Exponent> u(n, 0);
  for (;;) {
    Monomial m(u);
    if (!q.contains(m)) d.spaces.push_back({std::move(m), z});
    std::size_t k = vars.size();
    while (k-- > 0) {
      const std::size_t j = vars[k];
      if (u[j] + 1 < limit[j]) {
        ++u[j];
        break;
      }
      u[j] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return d;
}

namespace {

void require_irreducible_pair(const MonomialIdeal& q, const MonomialIdeal& q2, const char* who) {
  if (q.num_vars() != q2.num_vars()) throw InvalidArgument("ideals live in different rings");
  for (const auto* ideal : {&q, &q2}) {
    if (ideal->is_zero() || ideal->is_unit() || !is_irreducible(*ideal)) {
      throw HypothesisError(std::string(who) + " needs two non-zero proper irreducible ideals");
    }
  }
}

// A decomposition of an ideal of the subring on `block`, in the coordinates
// of the full ring. Empty blocks stand for the ring K: the unit ideal is
// 1·K[∅], the zero ideal has no spaces.
std::vector<StanleySpace> block_decomposition(const MonomialIdeal& ideal, VarSet block,
                                              const EngineOptions& options) {
  const std::size_t n = ideal.num_vars();
  const MonomialIdeal local = block.empty() ? ideal : restrict_to(ideal, block);
  const bool unit = block.empty() ? ideal.is_unit() : local.is_unit();
  const bool zero = block.empty() ? !ideal.is_unit() : local.is_zero();
  if (zero) return {};
  if (unit) return {{Monomial(n), block}};

  const SdepthResult best = compute_sdepth(Target::ideal(local), options);
  const auto positions = block.indices();
  std::vector<StanleySpace> spaces;
  spaces.reserve(best.decomposition.spaces.size());
  for (const auto& space : best.decomposition.spaces) {
    std::vector<Exponent> u(n, 0);
    VarSet z;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      u[positions[k]] = space.u[k];
      if (space.z.contains(k)) z.insert(positions[k]);
    }
    spaces.push_back({Monomial(std::move(u)), z});
  }
  return spaces;
}

// (A ∩ K[block_a]) · (B ∩ K[block_b]) · K[extra] as pairwise products,
// every space shifted by `shift`.
void append_products(std::vector<StanleySpace>& out, const std::vector<StanleySpace>& first,
                     const std::vector<StanleySpace>& second, VarSet extra, const Monomial& shift) {
  for (const auto& a : first) {
    for (const auto& b : second) out.push_back({a.u * b.u * shift, a.z | b.z | extra});
  }
}

}  // namespace

StanleyDecomposition build_product(const MonomialIdeal& q, const MonomialIdeal& q2,
                                   const EngineOptions& options) {
  require_irreducible_pair(q, q2, "build_product");
  const VarSet a = q.support();
  const VarSet b = q2.support();
  if (!(a & b).empty()) throw HypothesisError("build_product needs disjoint supports");
  const std::size_t n = q.num_vars();

  StanleyDecomposition d{Target::ideal(intersect(q, q2)), {}};
  append_products(d.spaces, block_decomposition(q, a, options), block_decomposition(q2, b, options),
                  VarSet::all(n) - (a | b), Monomial(n));
  return d;
}

StanleyDecomposition build_split(const MonomialIdeal& q, const MonomialIdeal& q2,
                                 const EngineOptions& options) {
  require_irreducible_pair(q, q2, "build_split");
  const SupportLayout lay = layout(q, q2);
  const VarSet first = lay.to_original(lay.only_first());
  const VarSet middle = lay.to_original(lay.overlap());
  const VarSet rest = lay.to_original(lay.only_second() | lay.free());
  const std::size_t n = q.num_vars();
  if (middle.empty()) return build_product(q, q2, options);

  const MonomialIdeal both = intersect(q, q2);
  StanleyDecomposition d{Target::ideal(both), {}};

  // (Q∩Q'∩K[middle])·S
  for (auto space : block_decomposition(both, middle, options)) {
    space.z = space.z | first | rest;
    d.spaces.push_back(std::move(space));
  }

  // w runs over monomials of K[middle] outside Q∩Q'; each exponent stays
  // below the larger of the two pure powers.
  const Monomial cap = both.exponent_bound();
  const auto vars = middle.indices();
  std::vector<Exponent> w(n, 0);
  for (;;) {
    Monomial mw(w);
    if (!both.contains(mw)) {
      append_products(d.spaces, block_decomposition(colon(q, mw), first, options),
                      block_decomposition(colon(q2, mw), rest, options), VarSet{}, mw);
    }
    std::size_t k = vars.size();
    while (k-- > 0) {
      const std::size_t j = vars[k];
      if (w[j] + 1 < cap[j]) {
        ++w[j];
        break;
      }
      w[j] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return d;
}

}  // namespace sdepthkit
