#include <stdio.h>
#include <string.h>

#include "wiegold/wiegold.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  wg_algebra* z2 = NULL;
  EXPECT(wg_algebra_load(WIEGOLD_FIXTURES "/algebras/z2.json", &z2) == WG_OK);
  EXPECT(z2 != NULL);
  EXPECT(wg_algebra_size(z2) == 2);
  EXPECT(wg_algebra_operation_count(z2) == 3);

  uint32_t args[2] = {1, 1};
  uint32_t out = 7;
  EXPECT(wg_algebra_apply(z2, 0, args, 2, &out) == WG_OK && out == 0);
  EXPECT(wg_algebra_apply(z2, 0, args, 1, &out) == WG_ERR_OTHER);
  EXPECT(strlen(wg_last_error()) > 0);
  EXPECT(wg_algebra_apply(z2, 9, args, 2, &out) == WG_ERR_OTHER);

  uint64_t d = 0;
  EXPECT(wg_d_exact(z2, 4, NULL, &d) == WG_OK && d == 4);
  wg_budget tiny;
  wg_budget_default(&tiny);
  tiny.max_tuples = 4;
  EXPECT(wg_d_exact(z2, 5, &tiny, &d) == WG_ERR_BUDGET);

  uint64_t g = 0;
  EXPECT(wg_row_bound(2, 2, 2, &g) == WG_OK && g == 8);

  wg_options opts;
  wg_options_default(&opts);
  char* text = NULL;
  EXPECT(wg_report_check_term(z2, "(+ x1 (+ x2 x3))", "maltsev", &opts,
                              &text) == WG_OK);
  EXPECT(text != NULL && strstr(text, "result: pass") != NULL);
  wg_string_free(text);

  EXPECT(wg_report_check_term(z2, "x1", "maltsev", &opts, &text) ==
         WG_NO_WITNESS);
  EXPECT(text != NULL);
  wg_string_free(text);

  EXPECT(wg_report_check_term(z2, "(+ x1", "maltsev", &opts, &text) ==
         WG_ERR_PARSE);
  EXPECT(text == NULL);

  opts.format = WG_FORMAT_JSON;
  EXPECT(wg_report_growth(z2, 3, 3, &opts, &text) == WG_OK);
  EXPECT(text != NULL && text[0] == '{');
  wg_string_free(text);

  EXPECT(wg_report_covering(2, 2, 8, 0, &opts, &text) == WG_OK);
  wg_string_free(text);
  opts.method = WG_METHOD_RANDOM;
  opts.max_attempts = 1;
  EXPECT(wg_report_covering(2, 2, 8, 4, &opts, &text) == WG_ERR_BUDGET);

  wg_algebra_free(z2);

  wg_algebra* bad = NULL;
  EXPECT(wg_algebra_parse("{\"name\":\"b\",\"size\":2,\"operations\":"
                          "[{\"symbol\":\"f\",\"arity\":1,\"table\":[0]}]}",
                          &bad) == WG_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(strstr(wg_last_error(), "f") != NULL);
  EXPECT(wg_algebra_load("/nonexistent.json", &bad) == WG_ERR_PARSE);

  wg_algebra* semi = NULL;
  EXPECT(wg_algebra_load(WIEGOLD_FIXTURES "/algebras/semilattice2.json",
                         &semi) == WG_OK);
  opts.format = WG_FORMAT_TEXT;
  EXPECT(wg_report_classify(semi, 3, &opts, &text) == WG_NO_WITNESS);
  wg_string_free(text);
  wg_algebra_free(semi);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
