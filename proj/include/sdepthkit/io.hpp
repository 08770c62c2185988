#ifndef SDEPTHKIT_IO_HPP
#define SDEPTHKIT_IO_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/monomial.hpp"

namespace sdepthkit {

// ideal  := "0" | term ("," term)*
// term   := factor ("*" factor)*
// factor := var ("^" uint)?
// Whitespace between tokens is ignored.
MonomialIdeal parse_ideal(std::string_view text, const RingContext& ring);
// A single term, or "1".
Monomial parse_monomial(std::string_view text, const RingContext& ring);

// One Stanley space per line as "u ; z1,z2". Blank lines and lines starting
// with '#' are skipped by the reader.
std::string format_decomposition(const StanleyDecomposition& d);
std::vector<StanleySpace> parse_decomposition(std::string_view text, const RingContext& ring);

// mt19937_64 with draws that do not depend on the standard library's
// distribution implementations, so a seed means the same thing everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi] by rejection.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Seed of the index-th instance of a stream (splitmix64 of both).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Support uniform among non-empty subsets, exponents uniform in [1, max_exp].
MonomialIdeal random_irreducible(Rng& rng, std::size_t n, Exponent max_exp);
// Pure powers on a random support plus up to two mixed generators below them.
MonomialIdeal random_primary(Rng& rng, std::size_t n, Exponent max_exp);
// Between 1 and max_gens non-unit generators with exponents in [0, max_exp].
MonomialIdeal random_ideal(Rng& rng, std::size_t n, Exponent max_exp, std::size_t max_gens);

}  // namespace sdepthkit

#endif  // SDEPTHKIT_IO_HPP
