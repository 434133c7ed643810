#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "vmeasure/vmeasure.h"

static int failures = 0;

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const char* kScenario =
    "{\"name\":\"e3\","
    "\"space\":{\"weights\":{\"tail\":{\"start\":0,\"coeff\":\"1\",\"ratio\":\"1\"}}},"
    "\"target\":{\"kind\":\"finite\",\"dim\":2,\"p\":2},"
    "\"F\":{\"kind\":\"rank\",\"terms\":[{\"seq\":{\"tail\":{\"start\":0,\"coeff\":\"1\",\"ratio\":\"1/2\"}},"
    "\"vec\":[\"3\",\"4\"]}]},"
    "\"checks\":[\"expectations\",\"rank_one_equality\"],"
    "\"expect\":{\"semivariation_N\":\"10\",\"bochner\":true}}";

static void test_run_scenario(void) {
  vm_scenarios* s = NULL;
  CHECK(vm_scenarios_parse(kScenario, &s) == VM_OK);
  CHECK(vm_scenarios_count(s) == 1);
  vm_run_options o;
  vm_run_options_init(&o);
  vm_report* r = NULL;
  CHECK(vm_run(s, &o, "capi", &r) == VM_OK);
  CHECK(vm_report_passed(r) == 1);
  CHECK(vm_report_checks(r) == 2);
  CHECK(vm_report_failures(r) == 0);
  char* text = NULL;
  CHECK(vm_report_text(r, &text) == VM_OK);
  CHECK(strstr(text, "RESULT PASS") != NULL);
  vm_string_free(text);
  char* json = NULL;
  CHECK(vm_report_json(r, &json) == VM_OK);
  CHECK(strstr(json, "\"result\": \"PASS\"") != NULL);
  vm_string_free(json);
  vm_report_free(r);
  vm_scenarios_free(s);
}

static void test_errors(void) {
  vm_scenarios* s = NULL;
  CHECK(vm_scenarios_parse("{oops", &s) == VM_ERR_PARSE);
  CHECK(strlen(vm_last_error()) > 0);
  CHECK(strcmp(vm_status_name(VM_ERR_PARSE), "ParseError") == 0);
  CHECK(vm_scenarios_parse("{\"space\":{}}", &s) == VM_ERR_VALIDATION);
  CHECK(strstr(vm_last_error(), "scenario.target") != NULL);
  CHECK(vm_scenarios_parse(NULL, &s) == VM_ERR_INVALID_ARGUMENT);
  vm_report* r = NULL;
  CHECK(vm_gallery_run("no-such-entry", NULL, &r) == VM_ERR_NOT_FOUND);
  CHECK(vm_gallery_name(vm_gallery_count()) == NULL);
}

static void test_gallery_and_fuzz(void) {
  CHECK(vm_gallery_count() == 7);
  CHECK(strcmp(vm_gallery_name(0), "example5") == 0);
  vm_report* r = NULL;
  CHECK(vm_gallery_run("c0-diagonal-ones", NULL, &r) == VM_OK);
  CHECK(vm_report_passed(r) == 1);
  vm_report_free(r);

  vm_report* a = NULL;
  vm_report* b = NULL;
  CHECK(vm_fuzz(42, 5, NULL, &a) == VM_OK);
  CHECK(vm_fuzz(42, 5, NULL, &b) == VM_OK);
  char* ja = NULL;
  char* jb = NULL;
  vm_report_json(a, &ja);
  vm_report_json(b, &jb);
  CHECK(strcmp(ja, jb) == 0);
  CHECK(vm_report_passed(a) == 1);
  vm_string_free(ja);
  vm_string_free(jb);
  vm_report_free(a);
  vm_report_free(b);
}

static void test_compute(void) {
  const char* request =
      "{\"op\":\"semivariation\","
      "\"space\":{\"weights\":{\"tail\":{\"start\":0,\"coeff\":\"1\",\"ratio\":\"1\"}}},"
      "\"target\":{\"kind\":\"c0\"},"
      "\"F\":{\"kind\":\"diagonal\",\"seq\":{\"tail\":{\"start\":0,\"coeff\":\"1\",\"ratio\":\"1\"}}}}";
  char* out = NULL;
  CHECK(vm_compute(request, &out) == VM_OK);
  CHECK(out && strstr(out, "\"value\":\"1\"") != NULL);
  vm_string_free(out);

  const char* not_in_sigma_f =
      "{\"op\":\"evaluate\",\"set\":{\"cofinite\":[]},"
      "\"space\":{\"weights\":{\"tail\":{\"start\":0,\"coeff\":\"1\",\"ratio\":\"1\"}}},"
      "\"target\":{\"kind\":\"c0\"},"
      "\"F\":{\"kind\":\"diagonal\",\"seq\":{\"tail\":{\"start\":0,\"coeff\":\"1\",\"ratio\":\"1\"}}}}";
  CHECK(vm_compute(not_in_sigma_f, &out) == VM_ERR_NOT_IN_SIGMA_F);
}

int main(void) {
  test_run_scenario();
  test_errors();
  test_gallery_and_fuzz();
  test_compute();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  printf("capi: all checks passed\n");
  return EXIT_SUCCESS;
}
