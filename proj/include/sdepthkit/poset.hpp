#ifndef SDEPTHKIT_POSET_HPP
#define SDEPTHKIT_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/monomial.hpp"
#include "sdepthkit/options.hpp"

namespace sdepthkit {

// The points a ≤ g of the box whose monomial x^a lies in J \ I, stored as
// indices into the mixed-radix box (last coordinate least significant, so
// index order is lexicographic order and a linear extension of ≤).
class CharacteristicPoset {
 public:
  // Default caps: componentwise maximum of all generator exponents, at least 1.
  // Throws ResourceError when the box exceeds options.max_points and
  // InvalidArgument when g_override does not dominate a generator.
  static CharacteristicPoset build(const Target& target,
                                   std::optional<std::vector<Exponent>> g_override = std::nullopt,
                                   const EngineOptions& options = {});

  const Target& target() const { return target_; }
  std::size_t num_vars() const { return caps_.size(); }
  std::span<const Exponent> caps() const { return caps_; }
  std::uint64_t box_size() const { return box_size_; }

  // Box indices of the points, increasing.
  std::span<const std::uint32_t> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  // Position of a box index within points(), or -1 when not a point.
  std::int32_t point_id(std::uint64_t box_index) const { return point_id_[box_index]; }
  bool contains(std::span<const Exponent> a) const;

  std::uint64_t index_of(std::span<const Exponent> a) const;
  std::vector<Exponent> decode(std::uint64_t box_index) const;
  std::uint64_t stride(std::size_t coordinate) const { return strides_[coordinate]; }

 private:
  CharacteristicPoset(Target target) : target_(std::move(target)) {}

  Target target_;
  std::vector<Exponent> caps_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t box_size_ = 0;
  std::vector<std::uint32_t> points_;
  std::vector<std::int32_t> point_id_;
};

// [lower, upper] in the componentwise order.
struct Interval {
  std::vector<Exponent> lower;
  std::vector<Exponent> upper;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;  // sorted by lower point
  std::size_t depth = 0;            // min rho(upper) over the intervals
};

// Number of coordinates where b reaches the cap.
std::size_t rho(std::span<const Exponent> b, std::span<const Exponent> caps);

// An interval partition whose upper points all have rho >= d, or nullopt when
// none exists. Exhaustive exact-cover search; deterministic.
std::optional<IntervalPartition> feasible_partition(const CharacteristicPoset& poset, std::size_t d,
                                                    const EngineOptions& options = {});

// Interval [a, b] becomes x^a·K[x_j : b_j = g_j].
StanleyDecomposition partition_to_decomposition(const IntervalPartition& partition,
                                                const CharacteristicPoset& poset);

struct SdepthResult {
  std::size_t sdepth = 0;
  // Optimal decomposition of the full target (free variables restored).
  StanleyDecomposition decomposition;
  // Variables dropped before the search.
  std::size_t stripped_variables = 0;
  std::uint64_t poset_points = 0;
};

// Exact Stanley depth of J/I with an optimal decomposition. Throws
// HypothesisError for the zero module.
SdepthResult compute_sdepth(const Target& target, const EngineOptions& options = {});

// I non-zero.
std::size_t sdepth_ideal(const MonomialIdeal& ideal, const EngineOptions& options = {});
// I proper.
std::size_t sdepth_quotient(const MonomialIdeal& ideal, const EngineOptions& options = {});
// I ⊊ J.
std::size_t sdepth_module(const MonomialIdeal& upper, const MonomialIdeal& lower,
                          const EngineOptions& options = {});

}  // namespace sdepthkit

#endif  // SDEPTHKIT_POSET_HPP
