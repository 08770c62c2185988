#include "sdepthkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/error.hpp"
#include "sdepthkit/io.hpp"
#include "sdepthkit/poset.hpp"

namespace sdepthkit {

using nlohmann::json;

namespace {

constexpr std::pair<Task, const char*> kTaskNames[] = {
    {Task::kSdepth, "sdepth"}, {Task::kDepth, "depth"},   {Task::kDim, "dim"},
    {Task::kDecompose, "decompose"}, {Task::kValidate, "validate"}, {Task::kBounds, "bounds"},
    {Task::kVerify, "verify"},
};

constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::kIrreduciblePair, "irreducible-pair"},
    {Family::kIrreducibleTriple, "irreducible-triple"},
    {Family::kPrimaryPair, "primary-pair"},
};

}  // namespace

const char* to_string(Task task) {
  for (const auto& [t, name] : kTaskNames) {
    if (t == task) return name;
  }
  return "unknown";
}

Task task_from_string(const std::string& name) {
  for (const auto& [t, n] : kTaskNames) {
    if (name == n) return t;
  }
  throw InvalidArgument("unknown task '" + name + "'");
}

const char* to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (name == n) return f;
  }
  throw InvalidArgument("unknown family '" + name + "'");
}

json ProblemSpec::echo() const {
  json out{{"ring", n}, {"task", to_string(task)}, {"characteristic", characteristic}, {"ideals", ideals}};
  if (task == Task::kValidate) out["decomposition"] = decomposition_text;
  return out;
}

json to_json(const BoundReport& report) {
  json hyps = json::array();
  for (const auto& h : report.hypotheses) hyps.push_back({{"description", h.description}, {"satisfied", h.satisfied}});
  json inputs = json::array();
  for (const auto& [key, value] : report.inputs) inputs.push_back({{"name", key}, {"value", value}});
  return {{"name", report.name},
          {"kind", to_string(report.kind)},
          {"target", report.target},
          {"applicable", report.applicable()},
          {"value", report.value ? json(*report.value) : json(nullptr)},
          {"hypotheses", std::move(hyps)},
          {"inputs", std::move(inputs)}};
}

json to_json(const PredicateOutcome& outcome) {
  return {{"name", outcome.name}, {"lhs", outcome.lhs}, {"rhs", outcome.rhs}, {"holds", outcome.holds}};
}

namespace {

struct Problem {
  RingContext ring;
  std::map<std::string, MonomialIdeal> ideals;

  const MonomialIdeal* find(const std::string& name) const {
    auto it = ideals.find(name);
    return it == ideals.end() ? nullptr : &it->second;
  }
  std::vector<MonomialIdeal> components() const {
    std::vector<MonomialIdeal> out;
    for (const char* name : {"Q1", "Q2", "Q3"}) {
      if (const auto* q = find(name)) out.push_back(*q);
    }
    return out;
  }
};

Problem parse_problem(const ProblemSpec& spec) {
  Problem p{RingContext(spec.n), {}};
  for (const auto& [name, text] : spec.ideals) {
    if (name != "I" && name != "J" && name != "Q1" && name != "Q2" && name != "Q3") {
      throw InvalidArgument("unknown ideal name '" + name + "'");
    }
    p.ideals.emplace(name, parse_ideal(text, p.ring));
  }
  const bool has_q = p.find("Q1") || p.find("Q2") || p.find("Q3");
  if (has_q) {
    if (p.find("I") || p.find("J")) throw InvalidArgument("give either I/J or Q1..Q3, not both");
    if (!p.find("Q1") || !p.find("Q2")) throw InvalidArgument("components need at least Q1 and Q2");
  } else if (!p.find("I") && !p.find("J")) {
    throw InvalidArgument("no ideal given");
  }
  return p;
}

MonomialIdeal intersection(const std::vector<MonomialIdeal>& qs) {
  MonomialIdeal out = qs.front();
  for (std::size_t k = 1; k < qs.size(); ++k) out = intersect(out, qs[k]);
  return out;
}

// Keyed "ideal", "quotient" or "module".
std::vector<std::pair<std::string, Target>> targets_of(const Problem& p) {
  std::vector<std::pair<std::string, Target>> out;
  const auto qs = p.components();
  if (!qs.empty()) {
    const MonomialIdeal x = intersection(qs);
    out.emplace_back("ideal", Target::ideal(x));
    out.emplace_back("quotient", Target::quotient(x));
    return out;
  }
  const auto* j = p.find("J");
  const auto* i = p.find("I");
  if (j && i) {
    out.emplace_back("module", Target::module(*j, *i));
  } else if (j) {
    out.emplace_back("ideal", Target::ideal(*j));
  } else {
    out.emplace_back("quotient", Target::quotient(*i));
  }
  return out;
}

// dim J/I = dim S/(I : J)
std::size_t module_dim(const Target& t) {
  MonomialIdeal annihilator = MonomialIdeal::unit(t.ring());
  bool first = true;
  for (const auto& g : t.upper().generators()) {
    MonomialIdeal c = colon(t.lower(), g);
    annihilator = first ? c : intersect(annihilator, c);
    first = false;
  }
  if (first) throw HypothesisError("the zero module has no dimension");
  if (annihilator.is_unit()) throw HypothesisError("the zero module has no dimension");
  if (annihilator.is_zero()) return t.num_vars();
  return krull_dim_quotient(annihilator);
}

std::size_t target_depth(const std::string& key, const Target& t, Characteristic c) {
  if (key == "ideal") return depth_ideal(t.upper(), c);
  if (key == "quotient") return depth_quotient(t.lower(), c);
  throw InvalidArgument("depth is only available for an ideal I or a quotient S/I");
}

// Exact values the closed-form bounds are compared against, by bound target.
std::map<std::string, std::int64_t> observed_values(const std::vector<MonomialIdeal>& qs, const EngineOptions& options,
                                                    json& values) {
  std::map<std::string, std::int64_t> observed;
  const MonomialIdeal x = intersection(qs);
  const auto sq = static_cast<std::int64_t>(sdepth_quotient(x, options));
  const auto si = static_cast<std::int64_t>(sdepth_ideal(x, options));
  values["sdepth"]["quotient"] = sq;
  values["sdepth"]["ideal"] = si;
  observed["I"] = si;
  if (qs.size() == 2) {
    observed["S/(Q∩Q')"] = sq;
    observed["Q∩Q'"] = si;
  } else {
    observed["S/(Q1∩Q2∩Q3)"] = sq;
    const MonomialIdeal upper = intersect(qs[1], qs[2]);
    if (upper != x) {
      const auto sm = static_cast<std::int64_t>(sdepth_module(upper, x, options));
      values["sdepth"]["module"] = sm;
      observed["(Q2∩Q3)/(Q1∩Q2∩Q3)"] = sm;
    } else {
      values["sdepth"]["module"] = nullptr;
    }
  }
  return observed;
}

json bounds_json(const std::vector<BoundReport>& reports, const std::map<std::string, std::int64_t>& observed) {
  json out = json::array();
  for (const auto& r : reports) {
    json entry = to_json(r);
    auto it = observed.find(r.target);
    if (it != observed.end()) {
      entry["exact"] = it->second;
      if (r.value) {
        bool ok = true;
        switch (r.kind) {
          case BoundKind::kLower:
            ok = *r.value <= it->second;
            break;
          case BoundKind::kUpper:
            ok = *r.value >= it->second;
            break;
          case BoundKind::kExact:
            ok = *r.value == it->second;
            break;
        }
        entry["consistent"] = ok;
      }
    } else {
      entry["exact"] = nullptr;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

void run_bounds(const Problem& p, const EngineOptions& options, json& record) {
  const auto qs = p.components();
  if (qs.empty()) throw InvalidArgument("bounds need components Q1, Q2 and optionally Q3");
  const auto observed = observed_values(qs, options, record["values"]);
  const auto reports = qs.size() == 2 ? pair_bounds(qs[0], qs[1], options) : triple_bounds(qs[0], qs[1], qs[2], options);
  record["bounds"] = bounds_json(reports, observed);
}

void run_verify(const Problem& p, const ProblemSpec& spec, const EngineOptions& options, json& record) {
  MonomialIdeal x = MonomialIdeal::zero(p.ring);
  const auto qs = p.components();
  if (!qs.empty()) {
    run_bounds(p, options, record);
    x = intersection(qs);
    if (qs.size() == 2) {
      const BoundReport eg = cor_eg(qs[0], qs[1]);
      if (eg.applicable()) {
        record["values"]["cor_eg_match"] = *eg.value == record["values"]["sdepth"]["quotient"].get<std::int64_t>();
      }
    }
  } else {
    const auto* j = p.find("J");
    const auto* i = p.find("I");
    if (j && i) throw InvalidArgument("verify takes a single ideal or components");
    x = j ? *j : *i;
  }
  json preds = json::array();
  preds.push_back(to_json(check_question_as(x, options)));
  preds.push_back(to_json(check_conjecture_ideal(x, options, spec.characteristic)));
  preds.push_back(to_json(check_conjecture_quotient(x, options, spec.characteristic)));
  record["predicates"] = std::move(preds);

  const auto d0 = depth_quotient(x, 0);
  const auto d2 = depth_quotient(x, 2);
  record["values"]["depth_quotient_char0"] = d0;
  record["values"]["depth_quotient_char2"] = d2;
  record["values"]["characteristic_disagreement"] = d0 != d2;
}

void run_task(const ProblemSpec& spec, const EngineOptions& options, json& record) {
  const Problem p = parse_problem(spec);
  json& values = record["values"];
  switch (spec.task) {
    case Task::kSdepth:
      for (const auto& [key, t] : targets_of(p)) values["sdepth"][key] = compute_sdepth(t, options).sdepth;
      break;
    case Task::kDepth:
      for (const auto& [key, t] : targets_of(p)) values["depth"][key] = target_depth(key, t, spec.characteristic);
      break;
    case Task::kDim:
      for (const auto& [key, t] : targets_of(p)) values["dim"][key] = module_dim(t);
      break;
    case Task::kDecompose:
      for (const auto& [key, t] : targets_of(p)) {
        const SdepthResult r = compute_sdepth(t, options);
        values["sdepth"][key] = r.sdepth;
        values["decomposition"][key] = format_decomposition(r.decomposition);
      }
      break;
    case Task::kValidate: {
      // Components name the ideal Q1∩Q2(∩Q3), not its quotient.
      const Target t = targets_of(p).front().second;
      StanleyDecomposition d{t, parse_decomposition(spec.decomposition_text, p.ring)};
      const ValidationReport report = validate(d);
      values["valid"] = report.valid;
      values["spaces"] = d.spaces.size();
      values["violation"] = report.violation ? json(to_string(*report.violation)) : json(nullptr);
      values["witness"] = report.witness ? json(to_string(*report.witness, p.ring)) : json(nullptr);
      values["sdepth"] = report.sdepth ? json(*report.sdepth) : json(nullptr);
      break;
    }
    case Task::kBounds:
      run_bounds(p, options, record);
      break;
    case Task::kVerify:
      run_verify(p, spec, options, record);
      break;
  }
}

}  // namespace

ResultRecord run(const ProblemSpec& spec, const EngineOptions& options) {
  json record{{"schema", kSchemaVersion}, {"engine", kEngineVersion}, {"instance", spec.echo()},
              {"status", "ok"}, {"values", json::object()}};
  const auto start = std::chrono::steady_clock::now();
  try {
    run_task(spec, options, record);
  } catch (const ResourceError& e) {
    record["status"] = "skipped";
    record["message"] = e.what();
    record["values"] = json::object();
    record.erase("bounds");
    record.erase("predicates");
  } catch (const HypothesisError& e) {
    record["status"] = "inapplicable";
    record["message"] = e.what();
  }
  record[kTimingField] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

std::string canonical_line(const ResultRecord& record) {
  json copy = record;
  copy.erase(kTimingField);
  return copy.dump();
}

json ExperimentConfig::to_json() const {
  return {{"seed", seed},           {"n_min", n_min},
          {"n_max", n_max},         {"max_exp", max_exp},
          {"family", to_string(family)}, {"count", count},
          {"time_limit_seconds", time_limit_seconds}, {"max_points", max_points},
          {"characteristic", characteristic}};
}

ProblemSpec experiment_instance(const ExperimentConfig& config, std::size_t index) {
  if (config.n_min < 1 || config.n_min > config.n_max) throw InvalidArgument("bad range of variable counts");
  Rng rng(derive_seed(config.seed, index));
  ProblemSpec spec;
  spec.n = static_cast<std::size_t>(rng.uniform(config.n_min, config.n_max));
  spec.task = Task::kVerify;
  spec.characteristic = config.characteristic;
  const std::size_t parts = config.family == Family::kIrreducibleTriple ? 3 : 2;
  for (std::size_t k = 0; k < parts; ++k) {
    const MonomialIdeal q = config.family == Family::kPrimaryPair ? random_primary(rng, spec.n, config.max_exp)
                                                                   : random_irreducible(rng, spec.n, config.max_exp);
    spec.ideals["Q" + std::to_string(k + 1)] = to_string(q);
  }
  return spec;
}

double ExperimentSummary::conjecture_pass_rate() const {
  return predicate_checks == 0 ? 1.0 : static_cast<double>(predicate_passes) / static_cast<double>(predicate_checks);
}

json ExperimentSummary::to_json() const {
  return {{"schema", kSchemaVersion},
          {"engine", kEngineVersion},
          {"instances", instances},
          {"ok", ok},
          {"skipped", skipped},
          {"errors", errors},
          {"cor_eg_checked", cor_eg_checked},
          {"cor_eg_mismatches", cor_eg_mismatches},
          {"bound_violations", bound_violations},
          {"bound_applicable", bound_applicable},
          {"bound_ties", bound_ties},
          {"ky_wins", ky_wins},
          {"layout_wins", layout_wins},
          {"ky_layout_ties", ky_layout_ties},
          {"predicate_checks", predicate_checks},
          {"predicate_passes", predicate_passes},
          {"conjecture_pass_rate", conjecture_pass_rate()},
          {"characteristic_disagreements", characteristic_disagreements},
          {"determinism_hash", determinism_hash}};
}

std::string ExperimentSummary::to_csv() const {
  std::ostringstream out;
  out << "metric,key,value\n";
  auto row = [&](const char* metric, const std::string& key, auto value) {
    out << metric << ',' << key << ',' << value << '\n';
  };
  row("instances", "", instances);
  row("ok", "", ok);
  row("skipped", "", skipped);
  row("errors", "", errors);
  row("cor_eg_checked", "", cor_eg_checked);
  row("cor_eg_mismatches", "", cor_eg_mismatches);
  row("bound_violations", "", bound_violations);
  for (const auto& [name, n] : bound_applicable) row("bound_applicable", name, n);
  for (const auto& [name, n] : bound_ties) row("bound_ties", name, n);
  row("ky_vs_layout", "ky", ky_wins);
  row("ky_vs_layout", "layout", layout_wins);
  row("ky_vs_layout", "tie", ky_layout_ties);
  row("predicate_checks", "", predicate_checks);
  row("predicate_passes", "", predicate_passes);
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.6f", conjecture_pass_rate());
  row("conjecture_pass_rate", "", rate);
  row("characteristic_disagreements", "", characteristic_disagreements);
  row("determinism_hash", "", determinism_hash);
  return out.str();
}

namespace {

class Fnv1a {
 public:
  void add(const std::string& s) {
    for (unsigned char c : s) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

void tally(ExperimentSummary& s, const json& record) {
  ++s.instances;
  const std::string status = record.value("status", "error");
  if (status == "skipped") {
    ++s.skipped;
    return;
  }
  if (status != "ok") {
    ++s.errors;
    return;
  }
  ++s.ok;
  const json& values = record["values"];
  if (values.contains("cor_eg_match")) {
    ++s.cor_eg_checked;
    if (!values["cor_eg_match"].get<bool>()) ++s.cor_eg_mismatches;
  }
  if (values.value("characteristic_disagreement", false)) ++s.characteristic_disagreements;

  std::optional<std::int64_t> ky, layout_best;
  for (const auto& b : record.value("bounds", json::array())) {
    if (!b["applicable"].get<bool>()) continue;
    const std::string name = b["name"];
    const auto value = b["value"].get<std::int64_t>();
    ++s.bound_applicable[name];
    if (!b["exact"].is_null() && b["exact"].get<std::int64_t>() == value) ++s.bound_ties[name];
    if (b.contains("consistent") && !b["consistent"].get<bool>()) ++s.bound_violations;
    if (name == "ky_o") ky = value;
    if (name == "lemma_ea" || name == "lemma_lb" || name == "lemma_lob" || name == "thm_lob") {
      layout_best = std::max(layout_best.value_or(value), value);
    }
  }
  if (ky && layout_best) {
    if (*ky > *layout_best) {
      ++s.ky_wins;
    } else if (*ky < *layout_best) {
      ++s.layout_wins;
    } else {
      ++s.ky_layout_ties;
    }
  }
  for (const auto& p : record.value("predicates", json::array())) {
    ++s.predicate_checks;
    if (p["holds"].get<bool>()) ++s.predicate_passes;
  }
}

}  // namespace

ExperimentSummary experiment(const ExperimentConfig& config, const std::function<void(const ResultRecord&)>& sink) {
  if (config.max_exp < 1) throw InvalidArgument("max exponent must be at least 1");
  if (config.n_min < 1 || config.n_min > config.n_max || config.n_max > kMaxVariables) {
    throw InvalidArgument("bad range of variable counts");
  }
  const std::size_t count = config.count;
  std::size_t threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::max<std::size_t>(1, std::min(threads, count));

  std::vector<std::optional<json>> slots(count);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= count) return;
      json record;
      const ProblemSpec spec = experiment_instance(config, index);
      try {
        EngineOptions options;
        options.max_points = config.max_points;
        options.with_time_limit(std::chrono::duration<double>(config.time_limit_seconds));
        record = run(spec, options);
      } catch (const std::exception& e) {
        record = {{"schema", kSchemaVersion}, {"engine", kEngineVersion}, {"instance", spec.echo()},
                  {"status", "error"},       {"message", e.what()},       {"values", json::object()},
                  {kTimingField, 0.0}};
      }
      record["instance"]["index"] = index;
      record["instance"]["family"] = to_string(config.family);
      {
        std::lock_guard lock(mutex);
        slots[index] = std::move(record);
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(work);

  ExperimentSummary summary;
  Fnv1a hash;
  try {
    for (std::size_t index = 0; index < count; ++index) {
      json record;
      {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return slots[index].has_value(); });
        record = std::move(*slots[index]);
        slots[index].reset();
      }
      hash.add(canonical_line(record));
      hash.add("\n");
      tally(summary, record);
      sink(record);
    }
  } catch (...) {
    next = count;  // a failing sink stops the stream; let the workers drain
    for (auto& t : pool) t.join();
    throw;
  }
  for (auto& t : pool) t.join();
  summary.determinism_hash = hash.hex();
  return summary;
}

}  // namespace sdepthkit
