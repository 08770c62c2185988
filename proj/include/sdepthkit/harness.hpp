#ifndef SDEPTHKIT_HARNESS_HPP
#define SDEPTHKIT_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "sdepthkit/homology.hpp"
#include "sdepthkit/monomial.hpp"
#include "sdepthkit/options.hpp"
#include "json.hpp"
#include "sdepthkit/formulas.hpp"

namespace sdepthkit {

inline constexpr const char* kEngineVersion = "sdepthkit 1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class Task { kSdepth, kDepth, kDim, kDecompose, kValidate, kBounds, kVerify };

const char* to_string(Task task);
Task task_from_string(const std::string& name);

// Ideals are named J (ambient), I (submodule or modulus) and Q1..Q3.
// J alone is the ideal J, I alone is S/I, both are J/I. Components alone
// stand for their intersection, reported both as ideal and as quotient
// (validate reads a decomposition of the ideal).
struct ProblemSpec {
  std::size_t n = 0;
  std::map<std::string, std::string> ideals;  // name -> text in the ideal grammar
  Task task = Task::kSdepth;
  Characteristic characteristic = 0;
  std::string decomposition_text;  // for kValidate

  nlohmann::json echo() const;
};

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const PredicateOutcome& outcome);

// Fields holding wall-clock time; they are left out of determinism hashes.
inline constexpr const char* kTimingField = "seconds";

// A self-contained JSON record: "schema", "engine", "instance" echo,
// "status" (ok | skipped | error | inapplicable), "values", "bounds",
// "predicates", "seconds".
using ResultRecord = nlohmann::json;

ResultRecord run(const ProblemSpec& spec, const EngineOptions& options = EngineOptions::from_environment());

enum class Family { kIrreduciblePair, kIrreducibleTriple, kPrimaryPair };

const char* to_string(Family family);
Family family_from_string(const std::string& name);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  Exponent max_exp = 2;
  Family family = Family::kIrreduciblePair;
  std::size_t count = 100;
  double time_limit_seconds = 60.0;
  std::uint64_t max_points = std::uint64_t{1} << 20;
  Characteristic characteristic = 0;
  std::size_t threads = 0;  // 0: hardware concurrency

  nlohmann::json to_json() const;
};

// The instance `index` of an experiment, as a problem spec.
ProblemSpec experiment_instance(const ExperimentConfig& config, std::size_t index);

struct ExperimentSummary {
  std::size_t instances = 0;
  std::size_t ok = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::size_t cor_eg_checked = 0;
  std::size_t cor_eg_mismatches = 0;
  std::size_t bound_violations = 0;
  std::map<std::string, std::size_t> bound_applicable;
  std::map<std::string, std::size_t> bound_ties;  // applicable and equal to the exact value
  std::size_t ky_wins = 0;      // n - ⌊|G|/2⌋ strictly better than every layout bound
  std::size_t layout_wins = 0;  // a layout bound strictly better
  std::size_t ky_layout_ties = 0;
  std::size_t predicate_checks = 0;
  std::size_t predicate_passes = 0;
  std::size_t characteristic_disagreements = 0;
  std::string determinism_hash;  // FNV-1a over records without timing

  double conjecture_pass_rate() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Runs every instance on a worker pool and hands records to `sink` in
// instance order.
ExperimentSummary experiment(const ExperimentConfig& config, const std::function<void(const ResultRecord&)>& sink);

// Record serialized without timing fields; what the determinism hash covers.
std::string canonical_line(const ResultRecord& record);

}  // namespace sdepthkit

#endif  // SDEPTHKIT_HARNESS_HPP
