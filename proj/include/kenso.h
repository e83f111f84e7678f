/* C API for the kenso exact contact-geometry engine.
 *
 * All functions return KENSO_OK (0) on success; on failure they return a
 * nonzero status and leave a human-readable message in the calling thread's
 * error slot (kenso_last_error). Output handles are only written on success
 * and must be released with the matching *_free function. Strings returned
 * through char** are heap-allocated and released with kenso_string_free.
 */
#ifndef KENSO_H
#define KENSO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kenso_status {
  KENSO_OK = 0,
  KENSO_EPARSE = 1,   /* definition text or expression did not parse */
  KENSO_EINVALID = 2, /* structurally invalid manifold or argument */
  KENSO_EDOMAIN = 3,  /* algebra/geometry precondition failed */
  KENSO_ENOTFOUND = 4,/* unknown builtin, vector, or function name */
  KENSO_EINTERNAL = 5
} kenso_status;

typedef enum kenso_format {
  KENSO_FORMAT_TEXT = 0,
  KENSO_FORMAT_JSON = 1
} kenso_format;

typedef enum kenso_mode {
  KENSO_MODE_EXACT = 0,
  KENSO_MODE_TRACE = 1,
  KENSO_MODE_XI_TRACE = 2
} kenso_mode;

typedef struct kenso_manifold kenso_manifold;
typedef struct kenso_result kenso_result;

const char* kenso_version(void);
/* Message for the most recent failure on this thread; never NULL. */
const char* kenso_last_error(void);

kenso_status kenso_manifold_from_source(const char* text, kenso_manifold** out);
kenso_status kenso_manifold_from_builtin(const char* name, kenso_manifold** out);
void kenso_manifold_free(kenso_manifold* m);
int kenso_manifold_dim(const kenso_manifold* m);
/* 1 when the manifold passed the Kenmotsu verification. */
int kenso_manifold_is_kenmotsu(const kenso_manifold* m);

kenso_status kenso_builtin_source(const char* name, char** out);
void kenso_string_free(char* s);

typedef struct kenso_soliton_opts {
  /* Expressions over free parameter symbols and rationals, e.g. "1", "-3/2",
   * "alpha". NULL selects the default ("1" / "0" / "1"). */
  const char* alpha;
  const char* beta;
  const char* k;
  const char* lambda;   /* NULL = unknown */
  const char* vector;   /* potential by name: "xi", a frame field, or a declared vector */
  const char* function; /* gradient potential (declared name or expression); overrides vector */
  kenso_mode mode;
  int star;             /* nonzero = use the star tensors */
  int precision;        /* decimal digits for numeric spot checks; 0 = default */
} kenso_soliton_opts;

kenso_status kenso_run_check(const kenso_manifold* m, kenso_result** out);
kenso_status kenso_run_curvature(const kenso_manifold* m, kenso_result** out);
kenso_status kenso_run_soliton(const kenso_manifold* m, const kenso_soliton_opts* opts,
                               kenso_result** out);
kenso_status kenso_run_classify_vector(const kenso_manifold* m, const char* vector,
                                       kenso_result** out);
kenso_status kenso_run_theorems(const kenso_manifold* m, const kenso_soliton_opts* opts,
                                kenso_result** out);

/* 1 when every requested check passed (exact soliton residual vanished). */
int kenso_result_passed(const kenso_result* r);
kenso_status kenso_result_render(const kenso_result* r, kenso_format format, char** out);
void kenso_result_free(kenso_result* r);

#ifdef __cplusplus
}
#endif

#endif /* KENSO_H */
