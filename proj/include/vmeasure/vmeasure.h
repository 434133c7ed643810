#ifndef VMEASURE_VMEASURE_H
#define VMEASURE_VMEASURE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VM_API __declspec(dllexport)
#else
#define VM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vm_status {
  VM_OK = 0,
  VM_ERR_INVALID_ARGUMENT = 1,
  VM_ERR_PARSE = 2,
  VM_ERR_VALIDATION = 3,
  VM_ERR_NEGATIVE_TERM = 4,
  VM_ERR_DIVERGENT_SERIES = 5,
  VM_ERR_DIMENSION_MISMATCH = 6,
  VM_ERR_MIXED_SPACE = 7,
  VM_ERR_MIXED_TAIL_RATIO = 8,
  VM_ERR_TOO_MANY_TERMS = 9,
  VM_ERR_TOO_LARGE = 10,
  VM_ERR_NOT_BOCHNER_INTEGRABLE = 11,
  VM_ERR_NOT_DUNFORD = 12,
  VM_ERR_NOT_PETTIS = 13,
  VM_ERR_NOT_LOCALLY_DETERMINED = 14,
  VM_ERR_NOT_LOCALLY_PETTIS = 15,
  VM_ERR_NOT_LOCALLY_BOCHNER = 16,
  VM_ERR_NOT_IN_SIGMA_F = 17,
  VM_ERR_NOT_NU_INTEGRABLE = 18,
  VM_ERR_PRECISION = 19,
  VM_ERR_NOT_FOUND = 20,
  VM_ERR_INTERNAL = 99
} vm_status;

/* Opaque handles. */
typedef struct vm_scenarios vm_scenarios;
typedef struct vm_report vm_report;

typedef struct vm_run_options {
  /* Nonzero: Euclidean norms as doubles, compared within 1e-9. */
  int approximate;
  uint64_t seed;
  /* Dual-ball samples per set for the semivariation check. */
  uint32_t dual_samples;
  /* Scenarios run on this many threads; report order is unaffected. */
  uint32_t jobs;
} vm_run_options;

VM_API void vm_run_options_init(vm_run_options* options);

/* Message of the last failing call on this thread ("" if none). */
VM_API const char* vm_last_error(void);
VM_API const char* vm_status_name(vm_status status);

/* Scenario files: one scenario object, an array, or {"scenarios": [...]}. */
VM_API vm_status vm_scenarios_parse(const char* json, vm_scenarios** out);
VM_API size_t vm_scenarios_count(const vm_scenarios* scenarios);
VM_API void vm_scenarios_free(vm_scenarios* scenarios);

VM_API vm_status vm_run(const vm_scenarios* scenarios, const vm_run_options* options, const char* title,
                        vm_report** out);

VM_API size_t vm_gallery_count(void);
/* Borrowed strings, valid for the lifetime of the library. */
VM_API const char* vm_gallery_name(size_t index);
VM_API const char* vm_gallery_summary(size_t index);
/* name == NULL runs every entry. Unknown names give VM_ERR_NOT_FOUND. */
VM_API vm_status vm_gallery_run(const char* name, const vm_run_options* options, vm_report** out);

VM_API vm_status vm_fuzz(uint64_t seed, size_t cases, const vm_run_options* options, vm_report** out);

VM_API int vm_report_passed(const vm_report* report);
VM_API size_t vm_report_checks(const vm_report* report);
VM_API size_t vm_report_failures(const vm_report* report);
/* Caller frees the string with vm_string_free. */
VM_API vm_status vm_report_text(const vm_report* report, char** out);
VM_API vm_status vm_report_json(const vm_report* report, char** out);
VM_API void vm_report_free(vm_report* report);

/* One-shot computations on JSON input, JSON result:
 *   {"op": ..., "space": ..., "target": ..., "F": ..., "set": ..., "g": ...}
 * ops: decide, local, evaluate, variation, variation_bruteforce,
 *      semivariation, classify, integrate. */
VM_API vm_status vm_compute(const char* request_json, char** out);

VM_API void vm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
