#define SDEPTHKIT_BUILDING
#include "sdepthkit/sdepthkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/error.hpp"
#include "sdepthkit/formulas.hpp"
#include "sdepthkit/harness.hpp"
#include "sdepthkit/homology.hpp"
#include "sdepthkit/io.hpp"
#include "sdepthkit/poset.hpp"

struct sdk_ideal {
  sdepthkit::MonomialIdeal value;
};

struct sdk_decomposition {
  sdepthkit::StanleyDecomposition value;
};

namespace {

using namespace sdepthkit;
using nlohmann::json;

thread_local std::string last_error;
thread_local std::int64_t last_position = -1;
thread_local std::uint64_t max_poset = 0;
thread_local double time_limit = 0.0;

EngineOptions current_options() {
  EngineOptions options = EngineOptions::from_environment();
  if (max_poset != 0) options.max_points = max_poset;
  if (time_limit > 0.0) options.with_time_limit(std::chrono::duration<double>(time_limit));
  return options;
}

sdk_status fail(sdk_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
sdk_status guarded(F&& body) {
  last_error.clear();
  last_position = -1;
  try {
    body();
    return SDK_OK;
  } catch (const ParseError& e) {
    last_position = static_cast<std::int64_t>(e.position());
    return fail(SDK_ERR_PARSE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(SDK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const HypothesisError& e) {
    return fail(SDK_ERR_HYPOTHESIS, e.what());
  } catch (const ResourceError& e) {
    return fail(SDK_ERR_RESOURCE, e.what());
  } catch (const json::exception& e) {
    return fail(SDK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SDK_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(SDK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SDK_ERR_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be NULL");
}

Target make_target(const sdk_ideal* upper, const sdk_ideal* lower) {
  if (upper == nullptr && lower == nullptr) throw InvalidArgument("need at least one of the two ideals");
  const RingContext& ring = upper ? upper->value.ring() : lower->value.ring();
  MonomialIdeal j = upper ? upper->value : MonomialIdeal::unit(ring);
  MonomialIdeal i = lower ? lower->value : MonomialIdeal::zero(ring);
  return Target::module(std::move(j), std::move(i));
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

}  // namespace

extern "C" {

const char* sdk_version(void) { return kEngineVersion; }

const char* sdk_last_error(void) { return last_error.c_str(); }

int64_t sdk_last_error_position(void) { return last_position; }

void sdk_string_free(char* s) { std::free(s); }

sdk_status sdk_set_max_poset(uint64_t points) {
  max_poset = points;
  return SDK_OK;
}

sdk_status sdk_set_time_limit(double seconds) {
  if (!(seconds >= 0.0)) return fail(SDK_ERR_INVALID_ARGUMENT, "time limit must be non-negative");
  time_limit = seconds;
  return SDK_OK;
}

sdk_status sdk_ideal_parse(size_t n, const char* text, sdk_ideal** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sdk_ideal{parse_ideal(text, RingContext(n))};
  });
}

void sdk_ideal_free(sdk_ideal* ideal) { delete ideal; }

sdk_status sdk_ideal_format(const sdk_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = copy_string(to_string(ideal->value));
  });
}

sdk_status sdk_ideal_num_vars(const sdk_ideal* ideal, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = ideal->value.num_vars();
  });
}

sdk_status sdk_ideal_intersect(const sdk_ideal* a, const sdk_ideal* b, sdk_ideal** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new sdk_ideal{intersect(a->value, b->value)};
  });
}

sdk_status sdk_ideal_sum(const sdk_ideal* a, const sdk_ideal* b, sdk_ideal** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new sdk_ideal{sum(a->value, b->value)};
  });
}

sdk_status sdk_dim_quotient(const sdk_ideal* ideal, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = krull_dim_quotient(ideal->value);
  });
}

sdk_status sdk_sdepth_ideal(const sdk_ideal* ideal, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = sdepth_ideal(ideal->value, current_options());
  });
}

sdk_status sdk_sdepth_quotient(const sdk_ideal* ideal, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = sdepth_quotient(ideal->value, current_options());
  });
}

sdk_status sdk_sdepth_module(const sdk_ideal* upper, const sdk_ideal* lower, size_t* out) {
  return guarded([&] {
    require(upper, "upper");
    require(lower, "lower");
    require(out, "out");
    *out = sdepth_module(upper->value, lower->value, current_options());
  });
}

sdk_status sdk_depth_quotient(const sdk_ideal* ideal, uint32_t characteristic, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = depth_quotient(ideal->value, characteristic);
  });
}

sdk_status sdk_depth_ideal(const sdk_ideal* ideal, uint32_t characteristic, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = depth_ideal(ideal->value, characteristic);
  });
}

sdk_status sdk_decompose(const sdk_ideal* upper, const sdk_ideal* lower, sdk_decomposition** out) {
  return guarded([&] {
    require(out, "out");
    const SdepthResult r = compute_sdepth(make_target(upper, lower), current_options());
    *out = new sdk_decomposition{r.decomposition};
  });
}

sdk_status sdk_decomposition_parse(const sdk_ideal* upper, const sdk_ideal* lower, const char* text,
                                   sdk_decomposition** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    Target t = make_target(upper, lower);
    auto spaces = parse_decomposition(text, t.ring());
    *out = new sdk_decomposition{StanleyDecomposition{std::move(t), std::move(spaces)}};
  });
}

void sdk_decomposition_free(sdk_decomposition* d) { delete d; }

sdk_status sdk_decomposition_format(const sdk_decomposition* d, char** out) {
  return guarded([&] {
    require(d, "decomposition");
    require(out, "out");
    *out = copy_string(format_decomposition(d->value));
  });
}

sdk_status sdk_decomposition_size(const sdk_decomposition* d, size_t* out) {
  return guarded([&] {
    require(d, "decomposition");
    require(out, "out");
    *out = d->value.spaces.size();
  });
}

sdk_status sdk_decomposition_validate(const sdk_decomposition* d, char** out_json) {
  return guarded([&] {
    require(d, "decomposition");
    require(out_json, "out_json");
    const ValidationReport r = validate(d->value);
    const json j{{"valid", r.valid},
                 {"violation", r.violation ? json(to_string(*r.violation)) : json(nullptr)},
                 {"witness", r.witness ? json(to_string(*r.witness, d->value.target.ring())) : json(nullptr)},
                 {"sdepth", r.sdepth ? json(*r.sdepth) : json(nullptr)}};
    *out_json = copy_string(j.dump());
  });
}

sdk_status sdk_bounds(const sdk_ideal* q1, const sdk_ideal* q2, const sdk_ideal* q3, char** out_json) {
  return guarded([&] {
    require(q1, "q1");
    require(q2, "q2");
    require(out_json, "out_json");
    const EngineOptions options = current_options();
    const auto reports = q3 ? triple_bounds(q1->value, q2->value, q3->value, options)
                            : pair_bounds(q1->value, q2->value, options);
    json out = json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    *out_json = copy_string(out.dump());
  });
}

sdk_status sdk_run(const char* problem_json, char** out_json) {
  return guarded([&] {
    require(problem_json, "problem_json");
    require(out_json, "out_json");
    const json j = json::parse(problem_json);
    ProblemSpec spec;
    spec.n = j.at("ring").get<std::size_t>();
    spec.task = task_from_string(j.at("task").get<std::string>());
    spec.ideals = j.at("ideals").get<std::map<std::string, std::string>>();
    spec.characteristic = get_or<Characteristic>(j, "characteristic", 0);
    spec.decomposition_text = get_or<std::string>(j, "decomposition", "");
    *out_json = copy_string(run(spec, current_options()).dump());
  });
}

sdk_status sdk_experiment(const char* config_json, sdk_record_callback on_record, void* user,
                          char** out_summary_json, char** out_csv) {
  return guarded([&] {
    require(config_json, "config_json");
    require(out_summary_json, "out_summary_json");
    const json j = json::parse(config_json);
    ExperimentConfig c;
    c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
    c.n_min = get_or<std::size_t>(j, "n_min", c.n_min);
    c.n_max = get_or<std::size_t>(j, "n_max", c.n_max);
    c.max_exp = get_or<Exponent>(j, "max_exp", c.max_exp);
    if (j.contains("family")) c.family = family_from_string(j.at("family").get<std::string>());
    c.count = get_or<std::size_t>(j, "count", c.count);
    c.time_limit_seconds = get_or<double>(j, "time_limit_seconds", time_limit > 0.0 ? time_limit : c.time_limit_seconds);
    c.max_points = get_or<std::uint64_t>(j, "max_points", current_options().max_points);
    c.characteristic = get_or<Characteristic>(j, "characteristic", c.characteristic);
    c.threads = get_or<std::size_t>(j, "threads", c.threads);
    const ExperimentSummary summary = experiment(c, [&](const ResultRecord& record) {
      if (on_record) on_record(record.dump().c_str(), user);
    });
    json s = summary.to_json();
    s["config"] = c.to_json();
    char* csv = out_csv ? copy_string(summary.to_csv()) : nullptr;
    *out_summary_json = copy_string(s.dump());
    if (out_csv) *out_csv = csv;
  });
}

}  // extern "C"
