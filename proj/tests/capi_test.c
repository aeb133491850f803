#include <stdio.h>
#include <string.h>

#include "hyperops/hyperops.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* part) { return s && strstr(s, part) != NULL; }

int main(void) {
  hyperops_bundle* b = NULL;
  hyperops_result* r = NULL;

  EXPECT(strlen(hyperops_version()) > 0);

  EXPECT(hyperops_corpus_bundle("lie.L4sym", &b) == HYPEROPS_OK);
  EXPECT(hyperops_classify_hyper(b, "omegas", NULL, &r) == HYPEROPS_OK);
  EXPECT(hyperops_result_exit_code(r) == 0);
  EXPECT(contains(hyperops_result_json(r), "\"status\": \"pass\""));
  EXPECT(contains(hyperops_result_text(r, 0), "classify-hyper: pass (exit 0)"));
  hyperops_result_free(r);

  EXPECT(hyperops_suite(b, "omegas", "product-one", &r) == HYPEROPS_PRECONDITION_ERROR);
  EXPECT(contains(hyperops_result_json(r), "\"domain\""));
  hyperops_result_free(r);

  EXPECT(hyperops_decompose(b, "omegas", &r) == HYPEROPS_OK);
  hyperops_result_free(r);

  {
    const char* args[] = {"w1"};
    EXPECT(hyperops_check(b, "symplectic", args, 1, &r) == HYPEROPS_OK);
    hyperops_result_free(r);
    const char* missing[] = {"nope"};
    EXPECT(hyperops_check(b, "symplectic", missing, 1, &r) == HYPEROPS_INPUT_ERROR);
    EXPECT(contains(hyperops_result_json(r), "unknown form 'nope'"));
    hyperops_result_free(r);
  }

  EXPECT(hyperops_search_forms(b, "L4sym", "symplectic", "w2", &r) == HYPEROPS_OK);
  EXPECT(contains(hyperops_result_json(r), "\"space_dim\": 5"));
  hyperops_result_free(r);

  EXPECT(hyperops_run(b, "{\"command\": \"suite\", \"triple\": \"omegas\", \"which\": \"derived\"}", &r) ==
         HYPEROPS_OK);
  hyperops_result_free(r);
  EXPECT(hyperops_run(b, "not json", &r) == HYPEROPS_INPUT_ERROR);
  EXPECT(r != NULL);
  hyperops_result_free(r);
  hyperops_bundle_free(b);

  b = NULL;
  EXPECT(hyperops_corpus_bundle("abelian.quat", &b) == HYPEROPS_OK);
  {
    const char* maps[3] = {"j1", "j2", "j3"};
    EXPECT(hyperops_correspond(b, "g", maps, "lie-b", &r) == HYPEROPS_OK);
    hyperops_result_free(r);
  }
  EXPECT(hyperops_reconstruct(b, "q1", "j1", "j2", &r) == HYPEROPS_OK);
  hyperops_result_free(r);
  hyperops_bundle_free(b);

  b = NULL;
  EXPECT(hyperops_corpus_bundle("broken.jacobi", &b) == HYPEROPS_OK);
  {
    const char* args[] = {"broken"};
    EXPECT(hyperops_check(b, "lie", args, 1, &r) == HYPEROPS_CHECK_FAILED);
    EXPECT(contains(hyperops_result_text(r, 0), "lie.jacobi at basis (1,2,3)"));
    EXPECT(contains(hyperops_result_text(r, 1), "\033["));
    hyperops_result_free(r);
  }
  hyperops_bundle_free(b);

  b = NULL;
  EXPECT(hyperops_corpus_bundle("no.such.entry", &b) == HYPEROPS_INPUT_ERROR);
  EXPECT(b == NULL);
  EXPECT(contains(hyperops_last_error(), "no.such.entry"));
  EXPECT(hyperops_bundle_parse("{\"field\": \"real\"}", &b) == HYPEROPS_INPUT_ERROR);
  EXPECT(hyperops_bundle_load("/nonexistent/bundle.json", &b) == HYPEROPS_INPUT_ERROR);
  EXPECT(hyperops_run_file("/nonexistent/bundle.json", "{\"command\": \"decompose\", \"triple\": \"t\"}", &r) ==
         HYPEROPS_INPUT_ERROR);
  EXPECT(r != NULL && hyperops_result_exit_code(r) == 2);
  hyperops_result_free(r);

  EXPECT(hyperops_corpus("list", NULL, &r) == HYPEROPS_OK);
  EXPECT(contains(hyperops_result_json(r), "prelie.rot4"));
  hyperops_result_free(r);
  EXPECT(hyperops_corpus("run", "abelian.para", &r) == HYPEROPS_OK);
  hyperops_result_free(r);

  hyperops_result_free(NULL);
  hyperops_bundle_free(NULL);

  if (failures) fprintf(stderr, "%d C API expectation(s) failed\n", failures);
  else printf("C API: all expectations met\n");
  return failures ? 1 : 0;
}
