#ifndef HEREDISG_H
#define HEREDISG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HSG_API __declspec(dllexport)
#else
#define HSG_API __attribute__((visibility("default")))
#endif

/* Return codes shared by every entry point; they double as CLI exit codes. */
#define HSG_OK 0
#define HSG_FAILED 1
#define HSG_USAGE 2

typedef struct hsg_quiver hsg_quiver;

typedef struct hsg_options {
  uint32_t characteristic; /* prime, default 101 */
  uint64_t seed;           /* default 0 */
  int nmax;                /* Ext degrees checked for tilting, default 3 */
  int bound;               /* tau-iteration bound, default 64 */
  int has_window;          /* nonzero to use window_lo..window_hi */
  int window_lo;
  int window_hi;
  int timing;              /* nonzero to fill elapsed_ms */
} hsg_options;

HSG_API const char* hsg_version(void);
HSG_API void hsg_default_options(hsg_options* opts);

/* Message of the last failed call on this thread, or "" when none. */
HSG_API const char* hsg_last_error(void);
/* Kebab-case code of the last failed call on this thread (e.g. "parse-error"), or "". */
HSG_API const char* hsg_last_error_code(void);

/* Quiver from a file or from text in the quiver format; NULL on error. */
HSG_API hsg_quiver* hsg_quiver_load(const char* path);
HSG_API hsg_quiver* hsg_quiver_parse(const char* text);
HSG_API void hsg_quiver_free(hsg_quiver* q);
HSG_API int hsg_quiver_vertex_count(const hsg_quiver* q);

/* NULL-terminated list of suite names, valid for the lifetime of the library. */
HSG_API const char* const* hsg_suite_names(void);

/* Runs a suite and stores the JSON report array in *report_json (free with hsg_string_free).
   Returns HSG_OK if every report passed, HSG_FAILED if any failed, HSG_USAGE on error. */
HSG_API int hsg_check(const hsg_quiver* q, const char* suite, const hsg_options* opts, char** report_json);

/* Answers a query (hom, ext, tau, tau-inverse, classify, indec) as a JSON object with a
   "text" field. Module arguments are P<v>, I<v>, S<v>, K<n> or a module file path; unused
   arguments may be NULL. Returns HSG_OK or HSG_USAGE. */
HSG_API int hsg_query(const hsg_quiver* q, const char* kind, const char* from, const char* to, const char* module,
                      const hsg_options* opts, char** result_json);

/* Dimensions of Hom and Ext^1 between two modules given in module-file text. */
HSG_API int hsg_hom_ext(const hsg_quiver* q, const char* module_a, const char* module_b, uint32_t characteristic,
                        int64_t* hom, int64_t* ext1);

/* Euler form <a, b> of two dimension vectors of length hsg_quiver_vertex_count. */
HSG_API int64_t hsg_euler_form(const hsg_quiver* q, const int64_t* a, const int64_t* b);

HSG_API void hsg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
