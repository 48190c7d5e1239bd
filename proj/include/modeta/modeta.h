#ifndef MODETA_H
#define MODETA_H

/* C interface to the modeta library. Objects are opaque handles released
 * with the matching _free function. Every fallible call returns a
 * modeta_status; on failure modeta_last_error() describes the problem for
 * the calling thread. Epsilon arguments take +1, -1, or 0 for "not pinned"
 * (both branches reported) where a report allows it. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(MODETA_BUILDING_LIBRARY)
#define MODETA_API __attribute__((visibility("default")))
#else
#define MODETA_API
#endif

typedef enum modeta_status {
  MODETA_OK = 0,
  MODETA_ERR_INVALID_ARGUMENT = 1,
  MODETA_ERR_PARSE = 2,
  MODETA_ERR_DIMENSION_MISMATCH = 3,
  MODETA_ERR_NOT_CHARACTERISTIC = 4,
  MODETA_ERR_NOT_PRIMITIVE = 5,
  MODETA_ERR_PRECONDITION = 6,
  MODETA_ERR_UNSOLVABLE = 7,
  MODETA_ERR_INTERNAL = 8
} modeta_status;

typedef struct modeta_form modeta_form;
typedef struct modeta_class modeta_class;
typedef struct modeta_report modeta_report;

MODETA_API const char* modeta_version(void);
MODETA_API const char* modeta_status_name(modeta_status status);
/* Message of the last failure on this thread, "" if none. */
MODETA_API const char* modeta_last_error(void);
/* 0 for MODETA_OK, 1 for internal failures, 2 for bad input. */
MODETA_API int modeta_exit_code(modeta_status status);

/* Forms: "diagonal(a,b)", "diag(e1,...,en)", "even(c)", "sum(a,b,c)",
 * "[[1,0],[0,-1]]", "1,0;0,-1", or "empty". */
MODETA_API modeta_status modeta_form_parse(const char* text, modeta_form** out);
MODETA_API modeta_status modeta_form_connected_sum(int a, int b, int c, modeta_form** out);
MODETA_API void modeta_form_free(modeta_form* form);
MODETA_API int modeta_form_rank(const modeta_form* form);
MODETA_API int modeta_form_signature(const modeta_form* form);
MODETA_API int modeta_form_is_spin(const modeta_form* form);

/* Classes: comma separated integers, e.g. "3,1,1". */
MODETA_API modeta_status modeta_class_parse(const char* text, modeta_class** out);
MODETA_API modeta_status modeta_class_from_coords(const int64_t* coords, size_t rank, modeta_class** out);
MODETA_API void modeta_class_free(modeta_class* cls);
MODETA_API int modeta_class_rank(const modeta_class* cls);

MODETA_API modeta_status modeta_pairing(const modeta_form* form, const modeta_class* x, const modeta_class* y,
                                        int64_t* out);
MODETA_API modeta_status modeta_is_characteristic(const modeta_form* form, const modeta_class* d, int* out);
MODETA_API modeta_status modeta_is_primitive(const modeta_class* d, int* out);
MODETA_API modeta_status modeta_spinc_class(const modeta_form* form, const modeta_class* d, int64_t* d_squared,
                                            int64_t* index);
/* epsilon must be +1 or -1; *out in [0,16). */
MODETA_API modeta_status modeta_beta(const modeta_form* form, const modeta_class* d, int epsilon, int* out);
MODETA_API modeta_status modeta_count_type_three(const modeta_form* form, int* out);

/* Reports carry one result as JSON and as aligned text with the same values. */
MODETA_API modeta_status modeta_classify(const modeta_form* base, const modeta_class* d, int k, int epsilon,
                                         modeta_report** out);
MODETA_API modeta_status modeta_quotients(const modeta_form* base, const modeta_class* d, int k, int epsilon,
                                          modeta_report** out);
/* Manifold given by invariants: type 1, 2 or 3; pin is used for type 3 and
 * q for type 1. */
MODETA_API modeta_status modeta_quotients_for(int type, int b2, int pin, int q, modeta_report** out);
MODETA_API modeta_status modeta_cobordism(const modeta_form* base, const modeta_class* d, int epsilon,
                                          modeta_report** out);
MODETA_API modeta_status modeta_family_type_three(const modeta_form* base, int target, int count, int epsilon,
                                                  modeta_report** out);
MODETA_API modeta_status modeta_family_type_one(const modeta_form* base, int q, int count, modeta_report** out);
/* Single value; the report holds "eta" as "num/den". */
MODETA_API modeta_status modeta_eta_closed_form(const modeta_form* base, const modeta_class* d, int ell,
                                                modeta_report** out);
MODETA_API modeta_status modeta_eta_table(int a, int b, int count, int epsilon, int target, modeta_report** out);
MODETA_API modeta_status modeta_moduli_lower_bound(int a, int b, int count, int epsilon, int target, int* out);
/* Runs the property suites; *failures receives the number of failed checks. */
MODETA_API modeta_status modeta_verify(int max_rank, int max_coord, modeta_report** out, int64_t* failures);

MODETA_API const char* modeta_report_json(const modeta_report* report);
MODETA_API const char* modeta_report_text(const modeta_report* report);
MODETA_API void modeta_report_free(modeta_report* report);

#ifdef __cplusplus
}
#endif

#endif
