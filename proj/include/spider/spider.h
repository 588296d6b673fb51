/* C interface to the spider library. Every function returns a spider_status;
   results come back through out-parameters. Strings handed out by the library
   are freed with spider_string_free, handles with their own free function.
   The last error message is kept per thread. */
#ifndef SPIDER_SPIDER_H
#define SPIDER_SPIDER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SPIDER_API __attribute__((visibility("default")))
#else
#define SPIDER_API
#endif

typedef enum spider_status {
  SPIDER_OK = 0,
  SPIDER_ERR_PARSE = 1,    /* malformed text; see spider_last_error_position */
  SPIDER_ERR_MISMATCH = 2, /* boundary or length mismatch */
  SPIDER_ERR_INVALID = 3,  /* precondition violated */
  SPIDER_ERR_NULL = 4,     /* a required pointer was null */
  SPIDER_ERR_IO = 5,
  SPIDER_ERR_INTERNAL = 6
} spider_status;

typedef enum spider_format { SPIDER_FORMAT_TEXT = 0, SPIDER_FORMAT_JSON = 1 } spider_format;

typedef struct spider_web spider_web;
typedef struct spider_tensor spider_tensor;
typedef struct spider_combination spider_combination;
typedef struct spider_report spider_report;
typedef struct spider_options spider_options;

typedef void (*spider_warn_fn)(const char *message, void *user);

SPIDER_API const char *spider_version(void);
SPIDER_API const char *spider_last_error(void);
/* 1-based line and column of the last parse error, 0 if not a parse error. */
SPIDER_API void spider_last_error_position(size_t *line, size_t *column);
SPIDER_API void spider_string_free(char *s);

/* Options for cached and parallel work. A null options pointer means defaults. */
SPIDER_API spider_status spider_options_new(spider_options **out);
SPIDER_API void spider_options_free(spider_options *o);
SPIDER_API spider_status spider_options_set_cache_dir(spider_options *o, const char *dir);
SPIDER_API spider_status spider_options_set_jobs(spider_options *o, unsigned jobs);
SPIDER_API spider_status spider_options_set_warn(spider_options *o, spider_warn_fn fn, void *user);

/* Validation of the string formats; out gets the normalized string and may be null. */
SPIDER_API spider_status spider_parse_signs(const char *text, char **out);
SPIDER_API spider_status spider_parse_states(const char *text, char **out);

/* Sign strings: newline-terminated lists. */
SPIDER_API spider_status spider_sign_strings(size_t n, char **out);
SPIDER_API spider_status spider_representatives(size_t plus, size_t minus, char **out);
SPIDER_API spider_status spider_class_representative(const char *signs, char **out);
SPIDER_API spider_status spider_dominant_count(const char *signs, uint64_t *out);
SPIDER_API spider_status spider_dominant_paths(const char *signs, char **out);

/* Webs. */
SPIDER_API spider_status spider_web_parse(const char *text, spider_web **out);
SPIDER_API void spider_web_free(spider_web *w);
SPIDER_API spider_status spider_web_clone(const spider_web *w, spider_web **out);
/* Text is the layered format; JSON adds top, bottom and encoding. */
SPIDER_API spider_status spider_web_format(const spider_web *w, spider_format f, char **out);
SPIDER_API spider_status spider_web_encoding(const spider_web *w, char **out);
SPIDER_API spider_status spider_web_equal(const spider_web *a, const spider_web *b, int *out);
SPIDER_API spider_status spider_web_is_invariant(const spider_web *w, int *out);
SPIDER_API spider_status spider_web_is_non_elliptic(const spider_web *w, int *out);

/* Growth. The residual strings are empty when the state string is dominant. */
SPIDER_API spider_status spider_grow(const char *signs, const char *states, spider_web **web,
                                     char **residual_signs, char **residual_states);
SPIDER_API spider_status spider_grow_random(const char *signs, const char *states, uint64_t seed,
                                            spider_web **web);
SPIDER_API spider_status spider_min_cut_states(const spider_web *w, char **out);

/* Expansions. */
SPIDER_API spider_status spider_evaluate(const spider_web *w, spider_tensor **out);
SPIDER_API spider_status spider_basis_expansion(const char *signs, const char *states,
                                                const spider_options *o, spider_tensor **out);
SPIDER_API void spider_tensor_free(spider_tensor *t);
SPIDER_API spider_status spider_tensor_parse(const char *text, spider_tensor **out);
SPIDER_API spider_status spider_tensor_format(const spider_tensor *t, spider_format f, char **out);
/* Coefficient at a state string, in the [[exponent,coefficient],...] form. */
SPIDER_API spider_status spider_tensor_coefficient(const spider_tensor *t, const char *states, char **out);
SPIDER_API spider_status spider_tensor_size(const spider_tensor *t, size_t *out);
SPIDER_API spider_status spider_tensor_is_invariant(const spider_tensor *t, int *out);

/* Reduction to non-elliptic normal form. A seed of 0 means the fixed face order. */
SPIDER_API spider_status spider_reduce(const spider_web *w, uint64_t seed, spider_combination **out);
SPIDER_API spider_status spider_rotate(const spider_web *w, spider_combination **out);
SPIDER_API void spider_combination_free(spider_combination *c);
SPIDER_API spider_status spider_combination_format(const spider_combination *c, spider_format f, char **out);
SPIDER_API spider_status spider_combination_size(const spider_combination *c, size_t *out);
/* The k-th term in encoding order; the web is a new handle. */
SPIDER_API spider_status spider_combination_term(const spider_combination *c, size_t k, spider_web **web,
                                                 char **coefficient);
SPIDER_API spider_status spider_combination_evaluate(const spider_combination *c, spider_tensor **out);

/* Scans. */
SPIDER_API spider_status spider_scan(const char *signs, const spider_options *o, spider_report **out);
SPIDER_API void spider_report_free(spider_report *r);
SPIDER_API spider_status spider_report_format(const spider_report *r, spider_format f, char **out);
/* Several reports as one document: concatenated text, or a JSON array. */
SPIDER_API spider_status spider_reports_format(const spider_report *const *rs, size_t n, spider_format f,
                                               char **out);
SPIDER_API spider_status spider_report_failure_count(const spider_report *r, size_t *out);
SPIDER_API spider_status spider_report_dimension(const spider_report *r, size_t *out);

/* Dual canonical basis of a sign string. */
SPIDER_API spider_status spider_dual_canonical_basis(const char *signs, const spider_options *o, spider_format f,
                                                     char **out);
/* Checks the hexagon correction on the 12-point counterexample; *ok is 1 on success. */
SPIDER_API spider_status spider_check_correction(const spider_options *o, int *ok, char **summary);

/* SVG drawing. top_state may be null; bottom_state may be null for invariant webs. */
SPIDER_API spider_status spider_render_svg(const spider_web *w, const char *top_state, const char *bottom_state,
                                           char **out);

#ifdef __cplusplus
}
#endif

#endif
