#ifndef SDEPTHKIT_MONOMIAL_HPP
#define SDEPTHKIT_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sdepthkit {

using Exponent = std::uint32_t;

// Inputs above this are rejected; desk-scale instances use exponents <= 4.
inline constexpr Exponent kMaxExponent = Exponent{1} << 16;

// Rings are limited so that variable subsets fit in one machine word.
inline constexpr std::size_t kMaxVariables = 64;

// A subset of the variables {x_1, ..., x_n}, bit i standing for x_{i+1}.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VarSet all(std::size_t n) {
    return VarSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VarSet single(std::size_t i) { return VarSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet operator-(VarSet o) const { return VarSet(bits_ & ~o.bits_); }

  // Indices in increasing order.
  std::vector<std::size_t> indices() const;

  friend constexpr auto operator<=>(VarSet, VarSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

class RingContext {
 public:
  // Variables named x1..xn.
  explicit RingContext(std::size_t n);
  explicit RingContext(std::vector<std::string> names);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  // Index of a variable name, or num_vars() when absent.
  std::size_t index_of(const std::string& name) const;

  // Ring on the variables of `subset`, in their original order and names.
  RingContext subring(VarSet subset) const;
  // Ring with `extra` fresh variables appended.
  RingContext extended(std::size_t extra) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

class Monomial {
 public:
  Monomial() = default;
  // The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_one() const;
  std::uint64_t degree() const;
  VarSet support() const;

  bool divides(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // this / gcd(this, other): the generator of (this) : other.
  Monomial colon(const Monomial& other) const;

  // The squarefree monomial on the support.
  Monomial squarefree() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

// Renders with `*` and `^`, e.g. "x1^2*x3"; the monomial 1 renders as "1".
std::string to_string(const Monomial& m, const RingContext& ring);

class MonomialIdeal {
 public:
  // The zero ideal of `ring`.
  explicit MonomialIdeal(RingContext ring);

  // Reduces to the unique minimal generating set.
  static MonomialIdeal from_generators(RingContext ring, std::vector<Monomial> gens);
  static MonomialIdeal zero(RingContext ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(RingContext ring);

  const RingContext& ring() const { return ring_; }
  std::size_t num_vars() const { return ring_.num_vars(); }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;
  // I ⊆ this, as sets of monomials.
  bool contains(const MonomialIdeal& other) const;

  // Union of generator supports.
  VarSet support() const;
  // Componentwise maximum of generator exponents.
  Monomial exponent_bound() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_.num_vars() == b.ring_.num_vars() && a.gens_ == b.gens_;
  }

 private:
  MonomialIdeal(RingContext ring, std::vector<Monomial> minimal_gens)
      : ring_(std::move(ring)), gens_(std::move(minimal_gens)) {}

  RingContext ring_;
  std::vector<Monomial> gens_;  // minimal, sorted lex-descending
};

std::string to_string(const MonomialIdeal& ideal);

// Permutation and integers 0 <= r <= t <= p <= n such that after renumbering
// supp √Q = {1..t} and supp √Q' = {r+1..p}.
struct SupportLayout {
  // position k of the new order holds original variable permutation[k]
  std::vector<std::size_t> permutation;
  std::size_t r = 0;
  std::size_t t = 0;
  std::size_t p = 0;
  std::size_t n = 0;

  VarSet only_first() const;   // new positions 0..r-1
  VarSet overlap() const;      // r..t-1
  VarSet only_second() const;  // t..p-1
  VarSet free() const;         // p..n-1
  // Map a set of new positions back to original variable indices.
  VarSet to_original(VarSet positions) const;
};

MonomialIdeal minimalize(const std::vector<Monomial>& gens, const RingContext& ring);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w);
MonomialIdeal radical(const MonomialIdeal& ideal);

bool is_primary(const MonomialIdeal& ideal);
bool is_irreducible(const MonomialIdeal& ideal);

// dim S/I. Throws HypothesisError for the unit ideal.
std::size_t krull_dim_quotient(const MonomialIdeal& ideal);

// Generators supported in `subset`, as an ideal of the subring on `subset`.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, VarSet subset);
// Same generators in a ring with `extra` more variables.
MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t extra);
// Generators re-embedded along `positions` into a ring of `ring.num_vars()`
// variables; positions[i] is the target index of variable i.
MonomialIdeal embed(const MonomialIdeal& ideal, const RingContext& ring,
                    std::span<const std::size_t> positions);

SupportLayout layout(const MonomialIdeal& q, const MonomialIdeal& q2);

}  // namespace sdepthkit

#endif  // SDEPTHKIT_MONOMIAL_HPP
