#ifndef HYPEROPS_H
#define HYPEROPS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HYPEROPS_API __attribute__((visibility("default")))
#else
#define HYPEROPS_API
#endif

typedef struct hyperops_bundle hyperops_bundle;
typedef struct hyperops_result hyperops_result;

/* Status codes equal the command-line exit codes. */
typedef enum hyperops_status {
  HYPEROPS_OK = 0,
  HYPEROPS_CHECK_FAILED = 1,
  HYPEROPS_INPUT_ERROR = 2,
  HYPEROPS_PRECONDITION_ERROR = 3,
  HYPEROPS_INTERNAL_ERROR = 4
} hyperops_status;

HYPEROPS_API const char* hyperops_version(void);

/* Message of the last failed call on this thread, or "" if none. */
HYPEROPS_API const char* hyperops_last_error(void);

HYPEROPS_API hyperops_status hyperops_bundle_parse(const char* text, hyperops_bundle** out);
HYPEROPS_API hyperops_status hyperops_bundle_load(const char* path, hyperops_bundle** out);
/* Bundle of a built-in corpus entry. */
HYPEROPS_API hyperops_status hyperops_corpus_bundle(const char* id, hyperops_bundle** out);
HYPEROPS_API void hyperops_bundle_free(hyperops_bundle* bundle);

/* Every call below stores a report in *out (release it with
   hyperops_result_free) and returns its exit code. Optional string
   arguments may be NULL. */
HYPEROPS_API hyperops_status hyperops_run(const hyperops_bundle* bundle, const char* request_json,
                                          hyperops_result** out);
/* Like hyperops_run, reading the bundle from a file; a bundle that fails to
   load still yields a report. */
HYPEROPS_API hyperops_status hyperops_run_file(const char* bundle_path, const char* request_json,
                                               hyperops_result** out);

HYPEROPS_API hyperops_status hyperops_check(const hyperops_bundle* bundle, const char* what, const char* const* args,
                                            size_t nargs, hyperops_result** out);
HYPEROPS_API hyperops_status hyperops_classify_hyper(const hyperops_bundle* bundle, const char* triple,
                                                     const char* flavor, hyperops_result** out);
HYPEROPS_API hyperops_status hyperops_suite(const hyperops_bundle* bundle, const char* triple, const char* which,
                                            hyperops_result** out);
HYPEROPS_API hyperops_status hyperops_decompose(const hyperops_bundle* bundle, const char* triple,
                                                hyperops_result** out);
HYPEROPS_API hyperops_status hyperops_reconstruct(const hyperops_bundle* bundle, const char* hflat, const char* i1,
                                                  const char* i2, hyperops_result** out);
HYPEROPS_API hyperops_status hyperops_search_forms(const hyperops_bundle* bundle, const char* algebra,
                                                   const char* target, const char* form, hyperops_result** out);
HYPEROPS_API hyperops_status hyperops_correspond(const hyperops_bundle* bundle, const char* form,
                                                 const char* const maps[3], const char* setting,
                                                 hyperops_result** out);

/* action is "list", "run" or "export"; id selects one entry. */
HYPEROPS_API hyperops_status hyperops_corpus(const char* action, const char* id, hyperops_result** out);

HYPEROPS_API int hyperops_result_exit_code(const hyperops_result* result);
/* Both strings are owned by the result. */
HYPEROPS_API const char* hyperops_result_json(const hyperops_result* result);
HYPEROPS_API const char* hyperops_result_text(hyperops_result* result, int color);
HYPEROPS_API void hyperops_result_free(hyperops_result* result);

#ifdef __cplusplus
}
#endif

#endif
