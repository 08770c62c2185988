#ifndef SDEPTHKIT_HOMOLOGY_HPP
#define SDEPTHKIT_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sdepthkit/monomial.hpp"

namespace sdepthkit {

// Characteristic of the coefficient field: 0 for Q, otherwise a prime.
using Characteristic = std::uint32_t;

// A simplicial complex on vertices 0..n-1 kept as its facets. The void
// complex has no faces at all; the irrelevant complex {∅} has the single
// facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t vertices, std::vector<VarSet> faces);

  static SimplicialComplex void_complex(std::size_t vertices) { return {vertices, {}}; }

  std::size_t vertices() const { return vertices_; }
  const std::vector<VarSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(VarSet face) const;
  // All faces, sorted by size then bits.
  std::vector<VarSet> faces() const;

 private:
  std::size_t vertices_;
  std::vector<VarSet> facets_;
};

// Ranks of reduced homology, entry k holding H̃_{k-1}, so entry 0 is H̃_{-1}.
// Trailing zeros are trimmed; the void complex gives an empty list.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                Characteristic characteristic = 0);

// Rank of an integer matrix over Q (fraction-free elimination) or over F_p.
std::size_t exact_rank(std::vector<std::vector<std::int64_t>> matrix, Characteristic characteristic);

// Faces b ≤ a, b squarefree, with x^(a-b) ∈ I.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& a);

// Multigraded Betti numbers of the ideal I: entry (i, a) is β_{i,a}(I), so
// β_{0,a} counts minimal generators of degree a. For the quotient,
// β_{i,a}(S/I) = β_{i-1,a}(I) when i ≥ 1.
struct BettiTable {
  Characteristic characteristic = 0;
  std::map<std::pair<std::size_t, Monomial>, std::uint64_t> entries;  // non-zero only

  std::uint64_t at(std::size_t i, const Monomial& a) const;
  // Σ_a β_{i,a}
  std::uint64_t total(std::size_t i) const;
  // Largest i with a non-zero entry.
  std::size_t max_index() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// β_{i,a}(I) = dim H̃_{i-1}(K^a(I)) over the lcms of generator subsets.
BettiTable betti(const MonomialIdeal& ideal, Characteristic characteristic = 0);

// Independent route through the Taylor complex: in each lcm degree a, the
// subsets with lcm a form a chain complex whose differential keeps only the
// faces of equal lcm. At most 20 generators.
BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, Characteristic characteristic = 0);

// pd(S/I) = 1 + pd(I); depth via Auslander-Buchsbaum. I non-zero and proper.
std::size_t proj_dim_quotient(const MonomialIdeal& ideal, Characteristic characteristic = 0);
std::size_t depth_quotient(const MonomialIdeal& ideal, Characteristic characteristic = 0);
std::size_t depth_ideal(const MonomialIdeal& ideal, Characteristic characteristic = 0);

}  // namespace sdepthkit

#endif  // SDEPTHKIT_HOMOLOGY_HPP
