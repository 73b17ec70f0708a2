#include <stdio.h>
#include <string.h>

#include "heredisg/heredisg.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  hsg_options opts;
  hsg_default_options(&opts);
  EXPECT(opts.characteristic == 101);
  EXPECT(opts.nmax == 3 && opts.bound == 64 && opts.seed == 0);

  hsg_quiver* a2 = hsg_quiver_parse("vertices 2\narrow a 1 2\n");
  EXPECT(a2 != NULL);
  EXPECT(hsg_quiver_vertex_count(a2) == 2);

  hsg_quiver* bad = hsg_quiver_parse("vertices 2\narrow a 1 1\n");
  EXPECT(bad == NULL);
  EXPECT(strcmp(hsg_last_error_code(), "cyclic-quiver") == 0);

  int suites = 0;
  for (const char* const* s = hsg_suite_names(); *s; ++s) ++suites;
  EXPECT(suites == 9);

  char* json = NULL;
  EXPECT(hsg_check(a2, "pipeline", &opts, &json) == HSG_OK);
  EXPECT(json != NULL && strstr(json, "\"check_name\": \"pipeline/gldim\"") != NULL);
  EXPECT(json != NULL && strstr(json, "gldim = 0") != NULL);
  hsg_string_free(json);

  json = NULL;
  EXPECT(hsg_check(a2, "no-such-suite", &opts, &json) == HSG_USAGE);
  EXPECT(json == NULL);
  EXPECT(strcmp(hsg_last_error_code(), "invalid-argument") == 0);

  EXPECT(hsg_query(a2, "tau", NULL, NULL, "S1", &opts, &json) == HSG_OK);
  EXPECT(strstr(json, "tau(S1) = S2") != NULL);
  hsg_string_free(json);

  EXPECT(hsg_query(a2, "hom", "P1", "S1", NULL, NULL, &json) == HSG_OK);
  EXPECT(strstr(json, "\"dimension\": 1") != NULL);
  hsg_string_free(json);

  int64_t hom = -1, ext = -1;
  const char* s1 = "dims 1 0\nmap a 0 x 1\n";
  const char* s2 = "dims 0 1\nmap a 1 x 0\n";
  EXPECT(hsg_hom_ext(a2, s1, s2, 101, &hom, &ext) == HSG_OK);
  EXPECT(hom == 0 && ext == 1);
  EXPECT(hsg_hom_ext(a2, "dims 1", s2, 101, &hom, &ext) == HSG_USAGE);

  int64_t d[2] = {1, 0}, e[2] = {0, 1};
  EXPECT(hsg_euler_form(a2, d, e) == -1);

  hsg_quiver* k = hsg_quiver_parse("vertices 2\narrow a 1 2\narrow b 1 2\n");
  EXPECT(hsg_check(k, "phi", &opts, &json) == HSG_OK);
  hsg_string_free(json);
  EXPECT(hsg_check(k, "gldim", &opts, &json) == HSG_USAGE);
  EXPECT(strcmp(hsg_last_error_code(), "not-dynkin") == 0);

  hsg_quiver_free(k);
  hsg_quiver_free(a2);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
