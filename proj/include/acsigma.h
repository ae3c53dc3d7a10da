/* acsigma — exact plane-variation calculus and constructive homeomorphisms.
 *
 * C interface to the shared library.  All functions returning acs_status set
 * a thread-local message retrievable with acs_last_error() on failure.
 * Strings returned through char** out-parameters are heap-allocated; release
 * them with acs_string_free().  Handles are opaque; release them with the
 * matching *_free call.  NULL handle or required-pointer arguments yield
 * ACS_ERR_BADARG.
 */
#ifndef ACSIGMA_H
#define ACSIGMA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acs_status {
  ACS_OK = 0,
  ACS_ERR_PARSE = 1,      /* malformed document or literal               */
  ACS_ERR_UNKNOWN_ID = 2, /* scene has no element with the given name    */
  ACS_ERR_DOMAIN = 3,     /* invalid geometry or unmet precondition      */
  ACS_ERR_VIOLATION = 4,  /* a fuzz campaign found a counterexample      */
  ACS_ERR_IO = 5,         /* file could not be read or written           */
  ACS_ERR_BADARG = 6,     /* NULL handle or malformed argument           */
  ACS_ERR_INTERNAL = 7    /* invariant breach inside the library (a bug) */
} acs_status;

typedef struct acs_scene acs_scene;
typedef struct acs_chain acs_chain;

const char* acs_version(void);
const char* acs_last_error(void); /* last failure message on this thread, or "" */
void acs_string_free(char* s);

/* ---- scenes ---- */
acs_status acs_scene_parse(const char* text, acs_scene** out);
acs_status acs_scene_load(const char* path, acs_scene** out);
acs_status acs_scene_serialize(const acs_scene* s, char** out_text);
acs_status acs_scene_save(const acs_scene* s, const char* path);
void acs_scene_free(acs_scene* s);

/* ---- chains ---- */
acs_status acs_chain_parse(const char* text, acs_chain** out);
acs_status acs_chain_load(const char* path, acs_chain** out);
acs_status acs_chain_serialize(const acs_chain* c, char** out_text);
acs_status acs_chain_save(const acs_chain* c, const char* path);
acs_status acs_chain_invert(const acs_chain* c, acs_chain** out);
size_t acs_chain_length(const acs_chain* c);
void acs_chain_free(acs_chain* c);

/* ---- commands (formatted results ready for printing) ----
 *
 * crossing count of a list against the line a*x + b*y + c = 0; the
 * coefficients are exact rational strings and (a, b) must be nonzero.
 * Output: "vf=K; crossing=[i,...]".
 */
acs_status acs_cmd_vf_line(const acs_scene* s, const char* list_id, const char* a, const char* b,
                           const char* c, char** out_text);

/* maximum crossing count over all lines, with a witness line and labeling.
 * Output: "vf_max=K; line=[a,b,c]; labels=[...]". */
acs_status acs_cmd_vf_max(const acs_scene* s, const char* list_id, char** out_text);

/* lower bound for the crossing-normalized variation of a sampled function;
 * max_len caps the searched list length (0 picks the default).
 * Output: "var_lb=V; norm_lb=N; vf=K; list=[i,...]; exhaustive=yes|no". */
acs_status acs_cmd_var(const acs_scene* s, const char* fn_id, int max_len, char** out_text);

/* flatten a polygon to a triangle; the certifying chain comes back through
 * out_chain and, when svg_dir is non-NULL, numbered snapshot frames are
 * written there.  Output: "steps=N". */
acs_status acs_cmd_reduce(const acs_scene* s, const char* polygon_id, const char* svg_dir,
                          acs_chain** out_chain, char** out_text);

/* normalize a windowed region onto the reference region of equal genus.
 * Output: "steps=N; genus=G". */
acs_status acs_cmd_normalize(const acs_scene* s, const char* region_id, const char* svg_dir,
                             acs_chain** out_chain, char** out_text);

/* every scene element pushed through the chain (inverted first when inverse
 * is nonzero) */
acs_status acs_cmd_apply(const acs_chain* c, const acs_scene* s, int inverse,
                         acs_scene** out_scene);

/* name: "disk-square" (n = even size cap), "fuzz-hpa", "fuzz-lpa" (trials),
 * "cn" (n = fan size, trials), "norm-examples".  A non-NULL svg_dir receives
 * plots where the experiment produces any.  Violations return
 * ACS_ERR_VIOLATION with the reproducer in acs_last_error(). */
acs_status acs_cmd_experiment(const char* name, long n, long trials, unsigned long long seed,
                              const char* svg_dir, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* ACSIGMA_H */
