#ifndef ORBITKIT_ORBITKIT_H
#define ORBITKIT_ORBITKIT_H

#if defined(ORBITKIT_BUILDING_LIBRARY)
#define OK_API __attribute__((visibility("default")))
#else
#define OK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum ok_status {
  OK_PASS = 0,     /* success / every check passed */
  OK_FAIL = 1,     /* a verification failed */
  OK_USAGE = 2,    /* bad arguments or input */
  OK_INTERNAL = 3  /* unexpected internal error */
} ok_status;

typedef struct ok_config ok_config;
typedef struct ok_result ok_result;

OK_API const char* ok_version(void);

OK_API ok_config* ok_config_new(void);
OK_API void ok_config_free(ok_config* cfg);
/* Keys: seed, trials, output (json|table), algebra, mutation, grid_n, grid_nq,
   series_order, fourier_id (repeatable), gen (repeatable).
   Returns OK_USAGE for an unknown key or a bad value. */
OK_API ok_status ok_config_set(ok_config* cfg, const char* key, const char* value);

/* Results are never NULL; release with ok_result_free. */
OK_API ok_status ok_result_status(const ok_result* r);
/* Rendered output (JSON or table per the config); empty on error. */
OK_API const char* ok_result_output(const ok_result* r);
/* JSON payload regardless of the output setting. */
OK_API const char* ok_result_json(const ok_result* r);
/* Error message for OK_USAGE / OK_INTERNAL, empty otherwise. */
OK_API const char* ok_result_error(const ok_result* r);
OK_API void ok_result_free(ok_result* r);

/* Coadjoint orbit of lambda X* + mu Y* in aff(R)* (rationals such as "3/2"). */
OK_API ok_result* ok_orbits_classify(const ok_config* cfg, const char* lambda, const char* mu);
/* Star product of two symbols given as JSON text. mode: "moyal" or "weyl"; h may be NULL. */
OK_API ok_result* ok_star(const ok_config* cfg, const char* u_json, const char* v_json, const char* mode, const char* h);
/* Comma-separated suite names or "all". */
OK_API ok_result* ok_verify(const ok_config* cfg, const char* suites);
/* family: "S", "U" or "Ttheta". */
OK_API ok_result* ok_rep_check(const ok_config* cfg, const char* family);
/* kind: "todd", "ahat" or "twist-check". */
OK_API ok_result* ok_genus(const ok_config* cfg, const char* kind, int degree);
OK_API ok_result* ok_rr_p1(const ok_config* cfg, const char* divisor);
/* Exactly one of path (JSON file) and builtin (point, cycleN, octahedron, torus7) is non-NULL. */
OK_API ok_result* ok_hodge(const ok_config* cfg, const char* path, const char* builtin);
/* algebra: "c", "c2", "m2" or a path to an algebra JSON file. */
OK_API ok_result* ok_xcq_homology(const ok_config* cfg, const char* algebra, int adic, int cap);
OK_API ok_result* ok_xcq_winding(const ok_config* cfg, const char* matrix_path);
/* idem: JSON array of algebra coordinates, or a k x k nested array of them. */
OK_API ok_result* ok_xcq_lift(const ok_config* cfg, const char* algebra, const char* idem, int adic);

#ifdef __cplusplus
}
#endif

#endif
