/* C interface to the arcspan library.
 *
 * All queries run against a context fixed at one odd ambient size n. Results
 * are heap-allocated JSON documents returned through json_out; release them
 * with arcspan_free. Documents are byte-identical for identical inputs,
 * whatever the jobs setting. On any status other than ARCSPAN_OK the output
 * pointer is left untouched unless noted, and arcspan_last_error holds a
 * message until the next call on the same context.
 */
#ifndef ARCSPAN_H
#define ARCSPAN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ARCSPAN_OK = 0,
  ARCSPAN_FAIL = 1,     /* a verification suite contains a failed statement */
  ARCSPAN_EUSAGE = 2,   /* bad argument */
  ARCSPAN_EINTERNAL = 3 /* broken invariant; a bug, not a caller mistake */
} arcspan_status;

typedef struct arcspan_ctx arcspan_ctx;

const char* arcspan_version(void);

/* n must be odd, 3 <= n <= 25 */
arcspan_status arcspan_open(int n, arcspan_ctx** out);
void arcspan_close(arcspan_ctx* ctx);

int arcspan_n(const arcspan_ctx* ctx);

/* worker threads for matrix builds; 0 restores the hardware default.
 * The setting is process-wide, not per context. */
arcspan_status arcspan_set_jobs(arcspan_ctx* ctx, int jobs);

const char* arcspan_last_error(const arcspan_ctx* ctx);

/* family: xn1 | xn2 | xn2-plus | xn2-minus | e | e-plus | e-minus
 * stratum: NULL or "" for everything, else "t=K", "prime", "doubleprime",
 * or "t=K,prime" style combinations where the family supports them. */
arcspan_status arcspan_enumerate(arcspan_ctx* ctx, const char* family,
                                 const char* stratum, char** json_out);

/* kind: c | cprime | cplus | cminus | A | Aprime | bar-plus-fourier */
arcspan_status arcspan_matrix(arcspan_ctx* ctx, const char* kind, char** json_out);

/* suite: "all", one statement id, or a comma-separated list. Returns
 * ARCSPAN_FAIL when any statement fails; the document is still written. */
arcspan_status arcspan_verify(arcspan_ctx* ctx, const char* suite, char** json_out);

arcspan_status arcspan_conjecture(arcspan_ctx* ctx, char** json_out);

void arcspan_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* ARCSPAN_H */
