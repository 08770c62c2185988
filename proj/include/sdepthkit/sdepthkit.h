/* C interface to sdepthkit. Every call returns an sdk_status; on failure
   sdk_last_error() describes the most recent error of the calling thread.
   Strings handed out by the library are released with sdk_string_free. */
#ifndef SDEPTHKIT_H
#define SDEPTHKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SDEPTHKIT_BUILDING)
#define SDK_API __attribute__((visibility("default")))
#else
#define SDK_API
#endif

typedef enum sdk_status {
  SDK_OK = 0,
  SDK_ERR_PARSE = 1,
  SDK_ERR_INVALID_ARGUMENT = 2,
  SDK_ERR_HYPOTHESIS = 3,
  SDK_ERR_RESOURCE = 4,
  SDK_ERR_INTERNAL = 5
} sdk_status;

typedef struct sdk_ideal sdk_ideal;
typedef struct sdk_decomposition sdk_decomposition;

SDK_API const char* sdk_version(void);
SDK_API const char* sdk_last_error(void);
/* Byte offset of the last parse error, or -1. */
SDK_API int64_t sdk_last_error_position(void);
SDK_API void sdk_string_free(char* s);

/* Engine limits for the calling thread. 0 restores the default. */
SDK_API sdk_status sdk_set_max_poset(uint64_t points);
SDK_API sdk_status sdk_set_time_limit(double seconds);

/* Ideals of K[x1..xn]. */
SDK_API sdk_status sdk_ideal_parse(size_t n, const char* text, sdk_ideal** out);
SDK_API void sdk_ideal_free(sdk_ideal* ideal);
SDK_API sdk_status sdk_ideal_format(const sdk_ideal* ideal, char** out);
SDK_API sdk_status sdk_ideal_num_vars(const sdk_ideal* ideal, size_t* out);
SDK_API sdk_status sdk_ideal_intersect(const sdk_ideal* a, const sdk_ideal* b, sdk_ideal** out);
SDK_API sdk_status sdk_ideal_sum(const sdk_ideal* a, const sdk_ideal* b, sdk_ideal** out);

/* dim S/I */
SDK_API sdk_status sdk_dim_quotient(const sdk_ideal* ideal, size_t* out);
SDK_API sdk_status sdk_sdepth_ideal(const sdk_ideal* ideal, size_t* out);
SDK_API sdk_status sdk_sdepth_quotient(const sdk_ideal* ideal, size_t* out);
/* sdepth J/I, I contained in J */
SDK_API sdk_status sdk_sdepth_module(const sdk_ideal* upper, const sdk_ideal* lower, size_t* out);
/* characteristic 0 or a prime */
SDK_API sdk_status sdk_depth_quotient(const sdk_ideal* ideal, uint32_t characteristic, size_t* out);
SDK_API sdk_status sdk_depth_ideal(const sdk_ideal* ideal, uint32_t characteristic, size_t* out);

/* An optimal decomposition of J/I; NULL upper means S, NULL lower means 0. */
SDK_API sdk_status sdk_decompose(const sdk_ideal* upper, const sdk_ideal* lower, sdk_decomposition** out);
/* Reads the line format "u ; z1,z2" as a decomposition of J/I. */
SDK_API sdk_status sdk_decomposition_parse(const sdk_ideal* upper, const sdk_ideal* lower, const char* text,
                                           sdk_decomposition** out);
SDK_API void sdk_decomposition_free(sdk_decomposition* d);
SDK_API sdk_status sdk_decomposition_format(const sdk_decomposition* d, char** out);
SDK_API sdk_status sdk_decomposition_size(const sdk_decomposition* d, size_t* out);
/* JSON: {"valid", "violation", "witness", "sdepth"} */
SDK_API sdk_status sdk_decomposition_validate(const sdk_decomposition* d, char** out_json);

/* Closed-form bounds for a pair (q3 NULL) or a triple, as a JSON array. */
SDK_API sdk_status sdk_bounds(const sdk_ideal* q1, const sdk_ideal* q2, const sdk_ideal* q3, char** out_json);

/* Runs a problem given as JSON {"ring", "task", "ideals", "characteristic",
   "decomposition"} and returns the result record as JSON. */
SDK_API sdk_status sdk_run(const char* problem_json, char** out_json);

/* Runs an experiment described by JSON {"seed", "n_min", "n_max",
   "max_exp", "family", "count", "time_limit_seconds", "max_points",
   "characteristic", "threads"}; missing keys take their defaults. Each
   record is passed to `on_record` as one JSON line, in instance order. The
   summary comes back as JSON and, when out_csv is not NULL, as CSV. */
typedef void (*sdk_record_callback)(const char* record_json, void* user);
SDK_API sdk_status sdk_experiment(const char* config_json, sdk_record_callback on_record, void* user,
                                  char** out_summary_json, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* SDEPTHKIT_H */
