#ifndef SDEPTHKIT_OPTIONS_HPP
#define SDEPTHKIT_OPTIONS_HPP

#include <chrono>
#include <cstdint>
#include <optional>

namespace sdepthkit {

// Resource caps and search switches for the exact Stanley-depth search.
struct EngineOptions {
  // Largest characteristic-poset box; SDEPTHKIT_MAX_POSET overrides it.
  std::uint64_t max_points = std::uint64_t{1} << 20;
  // Largest total size of all candidate intervals held by one search.
  std::uint64_t max_cells = std::uint64_t{1} << 27;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Variables outside every generator support add exactly one to sdepth;
  // dropping them first halves the box per variable.
  bool strip_free_variables = true;
  // Bisect on d instead of descending from the upper bound.
  bool binary_search = false;

  // Defaults with SDEPTHKIT_MAX_POSET applied when set.
  static EngineOptions from_environment();

  EngineOptions& with_time_limit(std::chrono::duration<double> limit) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(limit);
    return *this;
  }
};

}  // namespace sdepthkit

#endif  // SDEPTHKIT_OPTIONS_HPP
