/* C API for the gtsetlin engine: exact Gelfand-Tsetlin tableaux, relation
 * sets, and module verification. All functions return gts_status; results go
 * through out-parameters. Strings returned by the library are heap-allocated
 * and must be released with gts_string_free. Handles are opaque and freed
 * with their matching *_free function. The last failure message of the
 * calling thread is available via gts_last_error. */

#ifndef GTSETLIN_H
#define GTSETLIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gts_status {
  GTS_OK = 0,
  GTS_E_PARSE,
  GTS_E_SHAPE,
  GTS_E_ANCHOR,
  GTS_E_INVALID_RELATION,
  GTS_E_UNSATISFIABLE,
  GTS_E_CRITICAL_SET,
  GTS_E_CRITICAL_TABLEAU,
  GTS_E_ORDER_UNDETERMINED,
  GTS_E_NOT_RELEASABLE,
  GTS_E_NO_CASE,
  GTS_E_NOT_IN_BASIS,
  GTS_E_SINGULAR_ROW,
  GTS_E_NOT_REALIZATION,
  GTS_E_PRECONDITION,
  GTS_E_BUDGET,
  GTS_E_INFINITE_ENUMERATION,
  GTS_E_INTERNAL
} gts_status;

typedef struct gts_tableau gts_tableau;
typedef struct gts_relset gts_relset;

const char* gts_last_error(void);
void gts_string_free(char* s);

gts_status gts_tableau_parse(const char* json, gts_tableau** out);
gts_status gts_tableau_to_json(const gts_tableau* t, char** json_out);
void gts_tableau_free(gts_tableau* t);
gts_status gts_tableau_is_standard(const gts_tableau* t, int* out);
gts_status gts_tableau_is_noncritical(const gts_tableau* t, int* out);

gts_status gts_relset_parse(const char* json, gts_relset** out);
gts_status gts_relset_to_json(const gts_relset* c, char** json_out);
void gts_relset_free(gts_relset* c);
gts_status gts_relset_validate(const gts_relset* c, int* out);
gts_status gts_relset_is_satisfiable(const gts_relset* c, int* out);
gts_status gts_relset_is_noncritical(const gts_relset* c, int* out);
gts_status gts_relset_is_admissible(const gts_relset* c, int* out);
gts_status gts_relset_component_count(const gts_relset* c, int* out);
gts_status gts_relset_reduce(const gts_relset* c, gts_relset** out);

gts_status gts_satisfies(const gts_tableau* t, const gts_relset* c, int* out);
gts_status gts_is_realization(const gts_tableau* t, const gts_relset* c, int* out);

/* Runs one engine command. request_json is a {"verb": ..., ...} document;
 * the response document is written to response_json and the conventional
 * process exit code (0 pass, 1 fail, 2 input error) to exit_code. Returns
 * GTS_OK whenever a response document was produced. */
gts_status gts_run(const char* request_json, char** response_json, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
