/*
 * liefrob - analysis of Frobenius Lie algebras from structure constants.
 *
 * C interface to the shared library. All functions return lf_status;
 * results are handed back through out-parameters. Strings returned by the
 * library are heap-allocated and must be released with lf_string_free;
 * algebra handles with lf_algebra_free. On any failure the thread-local
 * message from lf_last_error() describes what went wrong.
 */

#ifndef LIEFROB_H
#define LIEFROB_H

#include <stdint.h>

#if defined(_WIN32)
#define LIEFROB_API __declspec(dllexport)
#else
#define LIEFROB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lf_status {
  LF_OK = 0,
  LF_ERR_PARSE = 1,         /* malformed input file or scalar */
  LF_ERR_VALIDATION = 2,    /* Jacobi/antisymmetry failure */
  LF_ERR_VERIFICATION = 3,  /* a constructed object failed its checks */
  LF_ERR_NOT_FROBENIUS = 4, /* no usable Frobenius functional */
  LF_ERR_ARGUMENT = 5,      /* bad parameters or preconditions */
  LF_ERR_UNSUPPORTED = 6,   /* operation undefined for this field */
  LF_ERR_INTERNAL = 7
} lf_status;

/* Opaque: an algebra plus an optional attached functional. */
typedef struct lf_algebra lf_algebra;

/* Construction ---------------------------------------------------------- */

/* Parses the JSON algebra-file format (see README). */
LIEFROB_API lf_status lf_algebra_parse(const char* json_text,
                                       lf_algebra** out);

/* Catalog constructors driven by a JSON parameter object, e.g.
 *   {"name":"aff","n":2}
 *   {"name":"gkxi","n":1,"k":"1","diag":["0","1"]}
 *   {"name":"preset","preset":"g7b"}                                     */
LIEFROB_API lf_status lf_algebra_catalog(const char* params_json,
                                         lf_algebra** out);

/* Shorthand for {"name":"preset","preset":name}; ktilde may be NULL. */
LIEFROB_API lf_status lf_algebra_preset(const char* name, const char* ktilde,
                                        lf_algebra** out);

LIEFROB_API void lf_algebra_free(lf_algebra* algebra);

/* Operations ------------------------------------------------------------ */

/* Serializes back to the algebra-file format (round-trips exactly over
 * the rational field). */
LIEFROB_API lf_status lf_algebra_emit(const lf_algebra* algebra,
                                      char** json_out);

/* Structured validation report. Returns LF_ERR_VALIDATION when the
 * algebra fails its axioms; the report (with the violation list) is
 * written either way. */
LIEFROB_API lf_status lf_algebra_validate(const lf_algebra* algebra,
                                          char** report_json_out);

/* Full analysis. functional_csv optionally overrides the attached
 * functional as comma-separated coordinates ("0,1,0,0"); pass NULL to use
 * the attached one or run the seeded search. Returns LF_ERR_NOT_FROBENIUS
 * (with the report still written) when no functional is available. */
LIEFROB_API lf_status lf_algebra_analyze(const lf_algebra* algebra,
                                         const char* functional_csv,
                                         uint64_t seed,
                                         char** report_json_out);

/* Embedding into sl(dim+1) as a JSON file; fails with
 * LF_ERR_VERIFICATION if the verified checks do not pass. */
LIEFROB_API lf_status lf_algebra_embed(const lf_algebra* algebra,
                                       const char* functional_csv,
                                       uint64_t seed, char** json_out);

/* Text rendering of any structured report produced by this library. */
LIEFROB_API lf_status lf_render_text(const char* report_json,
                                     char** text_out);

/* Utilities -------------------------------------------------------------- */

LIEFROB_API void lf_string_free(char* s);
LIEFROB_API const char* lf_last_error(void);
LIEFROB_API const char* lf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* LIEFROB_H */
