/* C interface to the wiegold library. Every function returns a wg_status;
 * on failure wg_last_error() describes the problem for the calling thread.
 * Strings returned through char** are heap-allocated; release them with
 * wg_string_free. */
#ifndef WIEGOLD_H
#define WIEGOLD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WG_API __declspec(dllexport)
#else
#define WG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WG_OK = 0,
  WG_ERR_OTHER = 1,
  WG_ERR_PARSE = 2,
  WG_ERR_BUDGET = 3,
  WG_ERR_VERIFICATION = 4,
  WG_NO_WITNESS = 5
} wg_status;

typedef enum { WG_FORMAT_TEXT = 0, WG_FORMAT_JSON = 1 } wg_format;
typedef enum { WG_METHOD_GREEDY = 0, WG_METHOD_RANDOM = 1 } wg_method;

typedef struct wg_algebra wg_algebra;

typedef struct {
  uint64_t max_tuples;
  uint64_t max_candidates;
  uint64_t exhaustive_subset_cap;
  uint64_t max_subuniverses;
} wg_budget;

typedef struct {
  wg_budget budget;
  wg_format format;
  wg_method method;
  uint64_t seed;
  uint32_t max_attempts;
  int verbose;
} wg_options;

WG_API void wg_budget_default(wg_budget* out);
WG_API void wg_options_default(wg_options* out);

WG_API const char* wg_last_error(void);
WG_API void wg_string_free(char* s);

WG_API wg_status wg_algebra_load(const char* path, wg_algebra** out);
WG_API wg_status wg_algebra_parse(const char* json, wg_algebra** out);
WG_API void wg_algebra_free(wg_algebra* alg);
WG_API uint32_t wg_algebra_size(const wg_algebra* alg);
WG_API size_t wg_algebra_operation_count(const wg_algebra* alg);
WG_API wg_status wg_algebra_apply(const wg_algebra* alg, size_t op,
                                  const uint32_t* args, size_t nargs,
                                  uint32_t* out);

/* d_A(n) by exhaustive search. */
WG_API wg_status wg_d_exact(const wg_algebra* alg, uint32_t n,
                            const wg_budget* budget, uint64_t* out);
/* Minimal k-surjective row count for alphabet b and width n. */
WG_API wg_status wg_row_bound(uint32_t b, uint32_t k, uint32_t n,
                              uint64_t* out);

/* Report commands. *out receives the formatted report whenever one was
 * produced, including for WG_NO_WITNESS and WG_ERR_VERIFICATION results;
 * otherwise it is set to NULL. */
WG_API wg_status wg_report_info(const wg_algebra* alg, const wg_options* opts,
                                char** out);
WG_API wg_status wg_report_classify(const wg_algebra* alg, uint32_t k_max,
                                    const wg_options* opts, char** out);
WG_API wg_status wg_report_growth(const wg_algebra* alg, uint32_t n_max,
                                  uint32_t k_max, const wg_options* opts,
                                  char** out);
WG_API wg_status wg_report_certify(const wg_algebra* alg, uint32_t n,
                                   uint32_t k_max, const wg_options* opts,
                                   char** out);
/* g = 0 selects the row bound. */
WG_API wg_status wg_report_covering(uint32_t b, uint32_t k, uint32_t n,
                                    uint64_t g, const wg_options* opts,
                                    char** out);
WG_API wg_status wg_report_check_term(const wg_algebra* alg, const char* term,
                                      const char* frame,
                                      const wg_options* opts, char** out);
WG_API wg_status wg_report_maximal(const wg_algebra* alg, uint32_t n,
                                   const wg_options* opts, char** out);
/* cube_k = 0 takes k from the first cataloged witness up to k_max. */
WG_API wg_status wg_report_verify_dichotomy(const wg_algebra* alg, uint32_t n,
                                            uint32_t cube_k, uint32_t k_max,
                                            const wg_options* opts,
                                            char** out);

#ifdef __cplusplus
}
#endif

#endif
