#include "sdepthkit/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sdepthkit/error.hpp"

namespace sdepthkit {

EngineOptions EngineOptions::from_environment() {
  EngineOptions options;
  if (const char* raw = std::getenv("SDEPTHKIT_MAX_POSET"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
      throw InvalidArgument(std::string("SDEPTHKIT_MAX_POSET must be a positive integer, got '") +
                            raw + "'");
    }
    options.max_points = value;
  }
  return options;
}

namespace {

bool generator_divides(const Monomial& g, std::span<const Exponent> a) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (g[j] > a[j]) return false;
  }
  return true;
}

bool ideal_contains(const MonomialIdeal& ideal, std::span<const Exponent> a) {
  const auto& gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return generator_divides(g, a); });
}

void check_deadline(const EngineOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    throw ResourceError("time limit exceeded during the Stanley depth search");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CharacteristicPoset

CharacteristicPoset CharacteristicPoset::build(const Target& target,
                                               std::optional<std::vector<Exponent>> g_override,
                                               const EngineOptions& options) {
  CharacteristicPoset poset(target);
  const std::size_t n = target.num_vars();
  const Monomial bound = target.upper().exponent_bound().lcm(target.lower().exponent_bound());

  if (g_override) {
    if (g_override->size() != n) throw InvalidArgument("cap vector has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if ((*g_override)[j] < bound[j]) {
        throw InvalidArgument("cap vector does not dominate the generator exponents in coordinate " +
                              std::to_string(j + 1));
      }
    }
    poset.caps_ = std::move(*g_override);
  } else {
    poset.caps_.resize(n);
    for (std::size_t j = 0; j < n; ++j) poset.caps_[j] = std::max<Exponent>(1, bound[j]);
  }

  poset.strides_.assign(n, 1);
  std::uint64_t box = 1;
  for (std::size_t j = n; j-- > 0;) {
    poset.strides_[j] = box;
    const std::uint64_t radix = std::uint64_t{poset.caps_[j]} + 1;
    if (box > options.max_points / radix) {
      throw ResourceError("characteristic poset box exceeds the limit of " +
                          std::to_string(options.max_points) + " points");
    }
    box *= radix;
  }
  if (box > options.max_points) {
    throw ResourceError("characteristic poset box exceeds the limit of " +
                        std::to_string(options.max_points) + " points");
  }
  poset.box_size_ = box;
  poset.point_id_.assign(box, -1);

  std::vector<Exponent> a(n, 0);
  for (std::uint64_t index = 0; index < box; ++index) {
    if ((index & 0xFFFF) == 0) check_deadline(options);
    if (ideal_contains(target.upper(), a) && !ideal_contains(target.lower(), a)) {
      poset.point_id_[index] = static_cast<std::int32_t>(poset.points_.size());
      poset.points_.push_back(static_cast<std::uint32_t>(index));
    }
    for (std::size_t j = n; j-- > 0;) {
      if (a[j] < poset.caps_[j]) {
        ++a[j];
        break;
      }
      a[j] = 0;
    }
  }
  return poset;
}

bool CharacteristicPoset::contains(std::span<const Exponent> a) const {
  if (a.size() != num_vars()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > caps_[j]) return false;
  }
  return point_id_[index_of(a)] >= 0;
}

std::uint64_t CharacteristicPoset::index_of(std::span<const Exponent> a) const {
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < a.size(); ++j) index += a[j] * strides_[j];
  return index;
}

std::vector<Exponent> CharacteristicPoset::decode(std::uint64_t box_index) const {
  std::vector<Exponent> a(num_vars());
  for (std::size_t j = 0; j < a.size(); ++j) {
    a[j] = static_cast<Exponent>(box_index / strides_[j]);
    box_index %= strides_[j];
  }
  return a;
}

std::size_t rho(std::span<const Exponent> b, std::span<const Exponent> caps) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == caps[j]) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Exact cover by dancing links. Items are poset points, options are intervals.

namespace {

class ExactCover {
 public:
  explicit ExactCover(std::size_t items)
      : items_(static_cast<std::int32_t>(items)),
        llink_(items + 1),
        rlink_(items + 1),
        len_(items + 1, 0),
        top_(items + 1),
        ulink_(items + 1),
        dlink_(items + 1) {
    for (std::int32_t i = 0; i <= items_; ++i) {
      llink_[i] = i == 0 ? items_ : i - 1;
      rlink_[i] = i == items_ ? 0 : i + 1;
      top_[i] = i;
      ulink_[i] = dlink_[i] = i;
    }
  }

  // Items are 0-based point ids.
  void add_option(std::span<const std::uint32_t> items) {
    const auto option = static_cast<std::int32_t>(begin_.size());
    begin_.push_back(static_cast<std::int32_t>(top_.size()));
    for (auto item0 : items) {
      const auto item = static_cast<std::int32_t>(item0) + 1;
      const auto node = static_cast<std::int32_t>(top_.size());
      top_.push_back(item);
      option_.resize(top_.size(), -1);
      option_[node] = option;
      // append at the bottom of the item's column
      ulink_.push_back(ulink_[item]);
      dlink_.push_back(item);
      dlink_[ulink_[item]] = node;
      ulink_[item] = node;
      ++len_[item];
    }
    end_.push_back(static_cast<std::int32_t>(top_.size()));
  }

  // Option ids of one exact cover, or nullopt.
  std::optional<std::vector<std::int32_t>> solve(const EngineOptions& options) {
    option_.resize(top_.size(), -1);
    std::vector<std::int32_t> chosen;  // node per level
    std::uint64_t steps = 0;
    enum class Step { kEnter, kTry, kNext, kBacktrack };
    Step step = Step::kEnter;
    std::int32_t item = 0;
    for (;;) {
      switch (step) {
        case Step::kEnter: {
          if (++steps % 8192 == 0) check_deadline(options);
          if (rlink_[0] == 0) {
            std::vector<std::int32_t> result;
            result.reserve(chosen.size());
            for (auto node : chosen) result.push_back(option_[node]);
            return result;
          }
          item = choose_item();
          cover(item);
          chosen.push_back(dlink_[item]);
          step = Step::kTry;
          break;
        }
        case Step::kTry: {
          const std::int32_t x = chosen.back();
          if (x == item) {
            uncover(item);
            chosen.pop_back();
            step = Step::kBacktrack;
            break;
          }
          for (std::int32_t q = x + 1; q < end_[option_[x]]; ++q) cover(top_[q]);
          for (std::int32_t q = begin_[option_[x]]; q < x; ++q) cover(top_[q]);
          step = Step::kEnter;
          break;
        }
        case Step::kNext: {
          const std::int32_t x = chosen.back();
          for (std::int32_t q = x - 1; q >= begin_[option_[x]]; --q) uncover(top_[q]);
          for (std::int32_t q = end_[option_[x]] - 1; q > x; --q) uncover(top_[q]);
          item = top_[x];
          chosen.back() = dlink_[x];
          step = Step::kTry;
          break;
        }
        case Step::kBacktrack: {
          if (chosen.empty()) return std::nullopt;
          step = Step::kNext;
          break;
        }
      }
    }
  }

 private:
  // Fewest remaining options; ties go to the lowest point id.
  std::int32_t choose_item() const {
    std::int32_t best = rlink_[0];
    std::int32_t best_len = len_[best];
    for (std::int32_t i = rlink_[best]; i != 0 && best_len > 0; i = rlink_[i]) {
      if (len_[i] < best_len) {
        best = i;
        best_len = len_[i];
      }
    }
    return best;
  }

  void hide(std::int32_t p) {
    const std::int32_t option = option_[p];
    for (std::int32_t q = begin_[option]; q < end_[option]; ++q) {
      if (q == p) continue;
      dlink_[ulink_[q]] = dlink_[q];
      ulink_[dlink_[q]] = ulink_[q];
      --len_[top_[q]];
    }
  }

  void unhide(std::int32_t p) {
    const std::int32_t option = option_[p];
    for (std::int32_t q = end_[option] - 1; q >= begin_[option]; --q) {
      if (q == p) continue;
      dlink_[ulink_[q]] = q;
      ulink_[dlink_[q]] = q;
      ++len_[top_[q]];
    }
  }

  void cover(std::int32_t item) {
    for (std::int32_t p = dlink_[item]; p != item; p = dlink_[p]) hide(p);
    rlink_[llink_[item]] = rlink_[item];
    llink_[rlink_[item]] = llink_[item];
  }

  void uncover(std::int32_t item) {
    rlink_[llink_[item]] = item;
    llink_[rlink_[item]] = item;
    for (std::int32_t p = ulink_[item]; p != item; p = ulink_[p]) unhide(p);
  }

  std::int32_t items_;
  std::vector<std::int32_t> llink_, rlink_, len_;
  // Nodes 0..items are column headers; option nodes follow contiguously.
  std::vector<std::int32_t> top_, ulink_, dlink_;
  std::vector<std::int32_t> option_;
  std::vector<std::int32_t> begin_, end_;
};

struct Candidate {
  std::uint32_t rho;
  std::uint32_t lower;  // box index
  std::uint32_t upper;  // box index
  std::uint64_t cells_begin;
  std::uint64_t cells_end;
};

// Candidate intervals [a, b] with rho(b) >= d. An interval whose upper point
// stops strictly between a_j and g_j in some coordinate splits into slices
// with the same rho, so only b_j ∈ {a_j, g_j} is enumerated.
class CandidateBuilder {
 public:
  CandidateBuilder(const CharacteristicPoset& poset, std::size_t d, const EngineOptions& options)
      : poset_(poset), d_(d), options_(options), caps_(poset.caps().begin(), poset.caps().end()) {}

  void run() {
    for (auto lower_index : poset_.points()) {
      check_deadline(options_);
      lower_ = poset_.decode(lower_index);
      open_.clear();
      std::size_t fixed = 0;
      for (std::size_t j = 0; j < caps_.size(); ++j) {
        if (lower_[j] == caps_[j]) {
          ++fixed;
        } else {
          open_.push_back(j);
        }
      }
      lower_index_ = lower_index;
      raised_.clear();
      extend(0, lower_index, fixed);
    }
  }

  std::vector<Candidate> candidates;
  std::vector<std::uint32_t> cells;  // point ids

 private:
  void extend(std::size_t k, std::uint64_t upper_index, std::size_t reached) {
    if (reached + (open_.size() - k) < d_) return;
    if (k == open_.size()) {
      emit(upper_index, reached);
      return;
    }
    const std::size_t j = open_[k];
    // keep b_j = a_j
    extend(k + 1, upper_index, reached);
    // raise b_j to g_j; points above a non-point are never points again
    const std::uint64_t raised = upper_index + (caps_[j] - lower_[j]) * poset_.stride(j);
    if (poset_.point_id(raised) < 0) return;
    raised_.push_back(j);
    extend(k + 1, raised, reached + 1);
    raised_.pop_back();
  }

  void emit(std::uint64_t upper_index, std::size_t reached) {
    const std::uint64_t begin = cells.size();
    // odometer over the raised coordinates
    std::vector<Exponent> offset(raised_.size(), 0);
    for (;;) {
      std::uint64_t index = lower_index_;
      for (std::size_t k = 0; k < raised_.size(); ++k) index += offset[k] * poset_.stride(raised_[k]);
      const std::int32_t id = poset_.point_id(index);
      if (id < 0) {
        // a ∈ J and b ∉ I put every c with a ≤ c ≤ b in J \ I
        throw std::logic_error("interval closure violated in the characteristic poset");
      }
      cells.push_back(static_cast<std::uint32_t>(id));
      std::size_t k = raised_.size();
      while (k-- > 0) {
        const std::size_t j = raised_[k];
        if (offset[k] < caps_[j] - lower_[j]) {
          ++offset[k];
          break;
        }
        offset[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    if (cells.size() > options_.max_cells) {
      throw ResourceError("candidate intervals exceed the limit of " +
                          std::to_string(options_.max_cells) + " cells");
    }
    candidates.push_back({static_cast<std::uint32_t>(reached), lower_index_,
                          static_cast<std::uint32_t>(upper_index), begin, cells.size()});
  }

  const CharacteristicPoset& poset_;
  std::size_t d_;
  const EngineOptions& options_;
  std::vector<Exponent> caps_;
  std::vector<Exponent> lower_;
  std::uint32_t lower_index_ = 0;
  std::vector<std::size_t> open_;
  std::vector<std::size_t> raised_;
};

}  // namespace

std::optional<IntervalPartition> feasible_partition(const CharacteristicPoset& poset, std::size_t d,
                                                    const EngineOptions& options) {
  if (poset.size() == 0) return IntervalPartition{{}, poset.num_vars()};
  if (d > poset.num_vars()) return std::nullopt;

  CandidateBuilder builder(poset, d, options);
  builder.run();

  // Larger rho first; lower then upper box index break ties.
  std::vector<std::size_t> order(builder.candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = builder.candidates[x];
    const auto& b = builder.candidates[y];
    if (a.rho != b.rho) return a.rho > b.rho;
    if (a.lower != b.lower) return a.lower < b.lower;
    return a.upper < b.upper;
  });

  ExactCover cover(poset.size());
  for (auto c : order) {
    const auto& cand = builder.candidates[c];
    cover.add_option(std::span<const std::uint32_t>(builder.cells).subspan(
        cand.cells_begin, cand.cells_end - cand.cells_begin));
  }
  auto solution = cover.solve(options);
  if (!solution) return std::nullopt;

  IntervalPartition partition;
  partition.depth = poset.num_vars();
  std::vector<const Candidate*> picked;
  for (auto option : *solution) picked.push_back(&builder.candidates[order[option]]);
  std::sort(picked.begin(), picked.end(), [](const Candidate* a, const Candidate* b) { return a->lower < b->lower; });
  for (const auto* cand : picked) {
    partition.intervals.push_back({poset.decode(cand->lower), poset.decode(cand->upper)});
    partition.depth = std::min<std::size_t>(partition.depth, cand->rho);
  }
  return partition;
}

StanleyDecomposition partition_to_decomposition(const IntervalPartition& partition,
                                                const CharacteristicPoset& poset) {
  StanleyDecomposition d{poset.target(), {}};
  d.spaces.reserve(partition.intervals.size());
  for (const auto& interval : partition.intervals) {
    VarSet z;
    for (std::size_t j = 0; j < interval.upper.size(); ++j) {
      if (interval.upper[j] == poset.caps()[j]) z.insert(j);
    }
    d.spaces.push_back({Monomial(interval.lower), z});
  }
  return d;
}

// ---------------------------------------------------------------------------
// Stanley depth

namespace {

std::size_t upper_bound_for(const CharacteristicPoset& poset) {
  std::size_t best = 0;
  for (auto index : poset.points()) best = std::max(best, rho(poset.decode(index), poset.caps()));
  if (poset.target().upper().is_unit()) {
    // sdepth S/I ≤ dim S/I
    best = std::min(best, krull_dim_quotient(poset.target().lower()));
  }
  return best;
}

}  // namespace

SdepthResult compute_sdepth(const Target& target, const EngineOptions& options) {
  if (target.is_zero_module()) throw HypothesisError("the module is zero; its Stanley depth is undefined");
  const std::size_t n = target.num_vars();
  const VarSet all = VarSet::all(n);
  const VarSet used = target.upper().support() | target.lower().support();
  const VarSet kept = options.strip_free_variables ? used : all;

  SdepthResult result{0, StanleyDecomposition{target, {}}, n - kept.size(), 0};
  if (kept.empty()) {
    // J is the unit ideal and I is zero: the module is S itself.
    result.sdepth = n;
    result.decomposition.spaces.push_back({Monomial(n), all});
    return result;
  }

  const Target reduced = kept == all ? target
                                     : Target::module(restrict_to(target.upper(), kept),
                                                      restrict_to(target.lower(), kept));
  const auto poset = CharacteristicPoset::build(reduced, std::nullopt, options);
  result.poset_points = poset.size();

  std::optional<IntervalPartition> best;
  const std::size_t ub = upper_bound_for(poset);
  if (options.binary_search) {
    std::size_t lo = 0, hi = ub;
    best = feasible_partition(poset, 0, options);
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (auto found = feasible_partition(poset, mid, options)) {
        best = std::move(found);
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
  } else {
    for (std::size_t d = ub + 1; d-- > 0;) {
      if ((best = feasible_partition(poset, d, options))) break;
    }
  }
  if (!best) throw std::logic_error("no interval partition found at depth 0");

  const StanleyDecomposition local = partition_to_decomposition(*best, poset);
  const auto positions = kept.indices();
  const VarSet stripped = all - kept;
  for (const auto& space : local.spaces) {
    std::vector<Exponent> u(n, 0);
    VarSet z = stripped;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      u[positions[k]] = space.u[k];
      if (space.z.contains(k)) z.insert(positions[k]);
    }
    result.decomposition.spaces.push_back({Monomial(std::move(u)), z});
  }
  result.sdepth = best->depth + result.stripped_variables;
  return result;
}

std::size_t sdepth_ideal(const MonomialIdeal& ideal, const EngineOptions& options) {
  if (ideal.is_zero()) throw HypothesisError("sdepth of the zero ideal is undefined");
  return compute_sdepth(Target::ideal(ideal), options).sdepth;
}

std::size_t sdepth_quotient(const MonomialIdeal& ideal, const EngineOptions& options) {
  if (ideal.is_unit()) throw HypothesisError("S/I is zero for the unit ideal");
  return compute_sdepth(Target::quotient(ideal), options).sdepth;
}

std::size_t sdepth_module(const MonomialIdeal& upper, const MonomialIdeal& lower,
                          const EngineOptions& options) {
  return compute_sdepth(Target::module(upper, lower), options).sdepth;
}

}  // namespace sdepthkit
