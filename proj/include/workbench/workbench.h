/* C interface to the workbench core. All handles are opaque; every call that can fail returns a
 * wb_status and leaves a message for wb_last_error() on the calling thread. Strings returned
 * through char** are owned by the caller and released with wb_string_free. */
#ifndef WORKBENCH_H
#define WORKBENCH_H

#include <stddef.h>

#if defined(WB_BUILDING)
#define WB_API __attribute__((visibility("default")))
#else
#define WB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WB_OK = 0,
  WB_ERR_ARGUMENT = 1,  /* null pointer, bad index, unknown section or script */
  WB_ERR_PARSE = 2,     /* presentation file rejected */
  WB_ERR_NOT_FOUND = 3, /* group or file not available */
  WB_ERR_INTERNAL = 4
} wb_status;

typedef enum { WB_FORMAT_TEXT = 0, WB_FORMAT_RECORDS = 1 } wb_format;

typedef enum { WB_INV_MULTIPLIER = 0, WB_INV_M0 = 1, WB_INV_B0 = 2, WB_INV_ORACLE = 3 } wb_invariant;

typedef struct wb_report wb_report;
typedef struct wb_groups wb_groups;
typedef struct wb_b0_result wb_b0_result;

WB_API const char* wb_version(void);
WB_API const char* wb_last_error(void);
WB_API void wb_string_free(char* s);

/* Verification reports. section is "4", "5", "6" or "all"; jobs = 0 uses every core. */
WB_API wb_status wb_verify_paper(const char* section, unsigned jobs, wb_report** out);
WB_API wb_status wb_replay(const char* script_id, wb_report** out);
WB_API size_t wb_report_claim_count(const wb_report* r);
WB_API size_t wb_report_failure_count(const wb_report* r);
/* Borrowed pointers, valid until wb_report_free. */
WB_API wb_status wb_report_claim(const wb_report* r, size_t i, const char** id, const char** ref, int* pass);
WB_API wb_status wb_report_format(const wb_report* r, wb_format fmt, char** out);
WB_API void wb_report_free(wb_report* r);

/* Group collections: the 17 built-in groups, or presentations read from a file. */
WB_API wb_status wb_groups_builtin(wb_groups** out);
WB_API wb_status wb_groups_load(const char* path, wb_groups** out);
WB_API size_t wb_groups_count(const wb_groups* g);
WB_API wb_status wb_groups_find(const wb_groups* g, int order, int id, size_t* index);
WB_API void wb_groups_free(wb_groups* g);

/* Bogomolov multiplier of one group. m0 is the starting tail exponent (>= 1). With oracle set,
 * the multiplier is also computed from the bar resolution. */
WB_API wb_status wb_b0(const wb_groups* g, size_t index, int m0, int oracle, wb_b0_result** out);
WB_API int wb_b0_trivial(const wb_b0_result* r);
WB_API int wb_b0_m(const wb_b0_result* r);
WB_API int wb_b0_anomaly(const wb_b0_result* r);
/* 1 if the oracle ran and agrees, 0 if it disagrees, -1 if it did not run. */
WB_API int wb_b0_oracle_agrees(const wb_b0_result* r);
WB_API wb_status wb_b0_invariants(const wb_b0_result* r, wb_invariant which, char** out);
WB_API void wb_b0_free(wb_b0_result* r);

/* Isoclinism decision; reason describes the witness or the obstruction. */
WB_API wb_status wb_isoclinic(const wb_groups* ga, size_t ia, const wb_groups* gb, size_t ib, int* isoclinic,
                              char** reason);

#ifdef __cplusplus
}
#endif

#endif
