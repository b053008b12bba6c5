#ifndef NSLAB_H
#define NSLAB_H

/* C interface to the near-semiring toolkit. Every call returns a status;
 * on failure nsl_last_error() holds a message for the calling thread.
 * Objects and reports are owned by the caller and released with
 * nsl_free / nsl_report_free. Strings returned by accessors live as long as
 * their owner. */

#include <stddef.h>
#include <stdint.h>

#if defined(NSLAB_BUILDING)
#define NSLAB_API __attribute__((visibility("default")))
#else
#define NSLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nsl_object nsl_object;
typedef struct nsl_report nsl_report;

typedef enum nsl_status {
  NSL_OK = 0,
  NSL_ERR_PARSE = 1,
  NSL_ERR_RANGE = 2,
  NSL_ERR_STRUCTURE = 3,
  NSL_ERR_PRECONDITION = 4,
  NSL_ERR_BOUND = 5,
  NSL_ERR_INTERNAL = 6,
  NSL_ERR_ARGUMENT = 7
} nsl_status;

typedef enum nsl_format { NSL_TEXT = 0, NSL_JSON = 1, NSL_DOT = 2 } nsl_format;

typedef enum nsl_kind { NSL_NEAR_SEMIRING = 0, NSL_BASIC_ALGEBRA = 1, NSL_ORTHOLATTICE = 2 } nsl_kind;

NSLAB_API const char* nsl_version(void);
NSLAB_API const char* nsl_last_error(void);
NSLAB_API const char* nsl_status_name(nsl_status s);

/* --- objects ------------------------------------------------------------ */

/* Algebra document (JSON). */
NSLAB_API nsl_status nsl_parse(const char* text, nsl_object** out);
/* Catalog name, or a product "A*B". */
NSLAB_API nsl_status nsl_fixture(const char* name, nsl_object** out);
NSLAB_API void nsl_free(nsl_object* obj);

NSLAB_API nsl_kind nsl_kind_of(const nsl_object* obj);
NSLAB_API size_t nsl_size(const nsl_object* obj);
NSLAB_API const char* nsl_name(const nsl_object* obj);
/* Operation value: op is "+", "*", "alpha" (y ignored), "oplus", "neg",
 * "join" or "ortho", depending on the kind. */
NSLAB_API nsl_status nsl_apply(const nsl_object* obj, const char* op, uint32_t x, uint32_t y, uint32_t* out);
/* Element index by label or decimal index. */
NSLAB_API nsl_status nsl_element(const nsl_object* obj, const char* label, uint32_t* out);

/* Near semiring of a basic algebra or ortholattice; a copy otherwise. */
NSLAB_API nsl_status nsl_as_near_semiring(const nsl_object* obj, nsl_object** out);
NSLAB_API nsl_status nsl_product(const nsl_object* a, const nsl_object* b, nsl_object** out);
/* target: "basic", "lns", "ons" or "oml". */
NSLAB_API nsl_status nsl_translate(const nsl_object* obj, const char* target, nsl_object** out);
/* *out is 1 when isomorphic, 0 otherwise. */
NSLAB_API nsl_status nsl_isomorphic(const nsl_object* a, const nsl_object* b, int* out);

/* --- reports ------------------------------------------------------------- */

NSLAB_API nsl_status nsl_document(const nsl_object* obj, nsl_report** out);
NSLAB_API nsl_status nsl_fixture_list(nsl_format fmt, nsl_report** out);

/* profile: an axiom profile name, or "lukasiewicz", "orthomodular",
 * "involution", "church", "basic" or "oml". */
NSLAB_API nsl_status nsl_check(const nsl_object* obj, const char* profile, nsl_format fmt, nsl_report** out);
/* suite: "core", "lukasiewicz", "sectional", "orthomodular", "oml",
 * "central", "witness" or "duality". */
NSLAB_API nsl_status nsl_properties(const nsl_object* obj, const char* suite, nsl_format fmt, nsl_report** out);
/* which: "sum" or "mul". DOT gives the Hasse diagram. */
NSLAB_API nsl_status nsl_order(const nsl_object* obj, const char* which, nsl_format fmt, nsl_report** out);
/* via: "basic" or "oml". */
NSLAB_API nsl_status nsl_roundtrip(const nsl_object* obj, const char* via, int verbose, nsl_format fmt,
                                   nsl_report** out);
NSLAB_API nsl_status nsl_congruences(const nsl_object* obj, nsl_format fmt, nsl_report** out);
/* method: "equational", "congruence", "full" or "all". */
NSLAB_API nsl_status nsl_center(const nsl_object* obj, const char* method, nsl_format fmt, nsl_report** out);
NSLAB_API nsl_status nsl_decompose(const nsl_object* obj, nsl_format fmt, nsl_report** out);

typedef struct nsl_search_options {
  unsigned threads;
  int allow_large;
} nsl_search_options;

/* Models are available through nsl_report_model. */
NSLAB_API nsl_status nsl_enumerate(size_t n, const char* constraint, const nsl_search_options* opt, nsl_format fmt,
                                   nsl_report** out);
/* violate: comma separated identity names that must fail (may be NULL). */
NSLAB_API nsl_status nsl_find(size_t n_max, const char* satisfy, const char* violate, const nsl_search_options* opt,
                              nsl_format fmt, nsl_report** out);

/* 1 when every requested check passed (for find: a model was found). */
NSLAB_API int nsl_report_passed(const nsl_report* r);
NSLAB_API const char* nsl_report_text(const nsl_report* r);
NSLAB_API double nsl_report_elapsed(const nsl_report* r);
NSLAB_API size_t nsl_report_model_count(const nsl_report* r);
NSLAB_API nsl_status nsl_report_model(const nsl_report* r, size_t i, nsl_object** out);
NSLAB_API void nsl_report_free(nsl_report* r);

#ifdef __cplusplus
}
#endif

#endif
