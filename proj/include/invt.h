#ifndef INVT_H
#define INVT_H

#include <stdint.h>

#if defined(INVT_BUILDING)
#define INVT_API __attribute__((visibility("default")))
#else
#define INVT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct invt_context invt_context;
typedef struct invt_result invt_result;
typedef struct invt_poly invt_poly;

enum {
	INVT_OK = 0,
	INVT_EINVAL = 1,    /* bad arguments or input text */
	INVT_EVERIFY = 2,   /* computation ran, a verification failed */
	INVT_EINTERNAL = 3, /* unexpected failure */
};

/* Truncation defaults to $INVT_TRUNC, else 20. Seed defaults to 1. */
INVT_API invt_context* invt_context_new(void);
INVT_API void invt_context_free(invt_context* ctx);
INVT_API void invt_context_set_trunc(invt_context* ctx, int trunc);
INVT_API int invt_context_trunc(const invt_context* ctx);
INVT_API void invt_context_set_seed(invt_context* ctx, uint64_t seed);
/* Message of the last failed call on ctx; "" if none. */
INVT_API const char* invt_last_error(const invt_context* ctx);

/* Every command fills *out (also on INVT_EVERIFY) with a human-readable text
 * and a JSON document. Strings stay valid until invt_result_free. */
INVT_API const char* invt_result_text(const invt_result* r);
INVT_API const char* invt_result_json(const invt_result* r);
INVT_API void invt_result_free(invt_result* r);

INVT_API int invt_binary_invariants(invt_context* ctx, int d, int g, invt_result** out);
/* method: "kernel" or "cs" */
INVT_API int invt_binary_dim(invt_context* ctx, int d, int g, const char* method, invt_result** out);
INVT_API int invt_reynolds(invt_context* ctx, int d, int g, const char* poly, invt_result** out);
/* (f,g)_n of binary forms of degrees df, dg. Coefficient lists are comma
 * separated rationals; NULL means symbolic (a0… for f, b0… for g). same != 0
 * computes (f,f)_n. */
INVT_API int invt_transvectant(invt_context* ctx, int df, int dg, int n, const char* fcoeffs, const char* gcoeffs,
                               int same, invt_result** out);
INVT_API int invt_ternary_invariants(invt_context* ctx, int d, int g, invt_result** out);
INVT_API int invt_bedratyuk(invt_context* ctx, int d, int g, invt_result** out);
/* e < 0 asks for the bigraded series */
INVT_API int invt_springer(invt_context* ctx, int d, int e, invt_result** out);
/* group: S2 S3 S4 S6, or A6 for the even classes of S6 */
INVT_API int invt_molien(invt_context* ctx, const char* group, const char* rep, invt_result** out);
INVT_API int invt_howe(invt_context* ctx, int d, int k, invt_result** out);
INVT_API int invt_symbolic_expand(invt_context* ctx, const char* tableau, invt_result** out);
/* "(13)(24)" straightens graphs, "[13][24]" straightens tableaux */
INVT_API int invt_straighten(invt_context* ctx, const char* expr, invt_result** out);
INVT_API int invt_noncrossing(invt_context* ctx, int d, const int* h, int nh, invt_result** out);
INVT_API int invt_six_line_checks(invt_context* ctx, int trials, invt_result** out);
INVT_API int invt_six_plane_checks(invt_context* ctx, int trials, invt_result** out);
/* criterion 0 runs all of them */
INVT_API int invt_selftest(invt_context* ctx, int criterion, invt_result** out);

/* vars: comma separated names */
INVT_API int invt_poly_parse(invt_context* ctx, const char* vars, const char* text, invt_poly** out);
INVT_API int invt_poly_from_json(invt_context* ctx, const char* json, invt_poly** out);
/* Returned strings are owned by the poly handle. */
INVT_API const char* invt_poly_str(invt_poly* p);
INVT_API const char* invt_poly_json(invt_poly* p);
INVT_API int invt_poly_equal(const invt_poly* a, const invt_poly* b);
INVT_API void invt_poly_free(invt_poly* p);

#ifdef __cplusplus
}
#endif

#endif
