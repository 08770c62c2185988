#ifndef SDEPTHKIT_DECOMPOSITION_HPP
#define SDEPTHKIT_DECOMPOSITION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdepthkit/monomial.hpp"
#include "sdepthkit/options.hpp"

namespace sdepthkit {

// The module J/I for monomial ideals I ⊆ J. The ideal I itself is I/0 and
// the quotient S/I is S/I with J the unit ideal.
class Target {
 public:
  static Target ideal(MonomialIdeal i);
  static Target quotient(MonomialIdeal i);
  // Throws InvalidArgument unless lower ⊆ upper in the same ring.
  static Target module(MonomialIdeal upper, MonomialIdeal lower);

  const MonomialIdeal& upper() const { return upper_; }
  const MonomialIdeal& lower() const { return lower_; }
  const RingContext& ring() const { return upper_.ring(); }
  std::size_t num_vars() const { return upper_.num_vars(); }

  bool contains(const Monomial& m) const { return upper_.contains(m) && !lower_.contains(m); }
  bool is_zero_module() const { return lower_.contains(upper_); }

 private:
  Target(MonomialIdeal upper, MonomialIdeal lower)
      : upper_(std::move(upper)), lower_(std::move(lower)) {}

  MonomialIdeal upper_;
  MonomialIdeal lower_;
};

// u·K[Z]
struct StanleySpace {
  Monomial u;
  VarSet z;

  bool contains(const Monomial& m) const;
  friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
};

struct StanleyDecomposition {
  Target target;
  std::vector<StanleySpace> spaces;
};

enum class ViolationKind { kOverlap, kGap, kOutside };

const char* to_string(ViolationKind kind);

struct ValidationReport {
  bool valid = false;
  // Set when !valid. The witness lies in two spaces (overlap), in the target
  // but in no space (gap), or in a space but outside the target (outside).
  std::optional<ViolationKind> violation;
  std::optional<Monomial> witness;
  // Set when valid and the decomposition is non-empty.
  std::optional<std::size_t> sdepth;
};

bool space_contains(const StanleySpace& space, const Monomial& m);

// Checks coverage, disjointness and containment on the box [0, G+1]^n, G the
// componentwise maximum over generators of both ideals and every u. Every
// membership predicate involved only looks at exponents up to G, so a
// violation anywhere has a witness inside the box.
ValidationReport validate(const StanleyDecomposition& d);

// min |Z|. Throws InvalidArgument when `d` does not validate or is empty.
std::size_t sdepth_of(const StanleyDecomposition& d);

// S/Q = ⊕ u·K[x_j : j ∉ supp √Q] over the monomials u in the support
// variables that lie outside Q.
StanleyDecomposition build_primary_quotient(const MonomialIdeal& q);

// Q ∩ Q' for irreducible Q, Q' with disjoint supports: products of optimal
// decompositions of the two blocks, with the remaining variables added to
// every space.
StanleyDecomposition build_product(const MonomialIdeal& q, const MonomialIdeal& q2,
                                 const EngineOptions& options = {});

// Q ∩ Q' for irreducible Q, Q': the extension of Q∩Q' restricted to the
// shared variables, plus one product piece w·((Q∩Q'):w) restricted to the
// remaining variables for every monomial w in the shared variables outside
// Q∩Q'.
StanleyDecomposition build_split(const MonomialIdeal& q, const MonomialIdeal& q2,
                                 const EngineOptions& options = {});

}  // namespace sdepthkit

#endif  // SDEPTHKIT_DECOMPOSITION_HPP
