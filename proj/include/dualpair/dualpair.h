/* dualpair: exact-arithmetic kernel for dual pair / theta correspondence
 * local computations: partition combinatorics, the polynomial Fock model,
 * exterior algebra on p, Kudla-Millson / Funke-Millson cocycle values, and
 * the archimedean Arthur parameter calculus.
 *
 * All functions return a dp_status; structured results are produced either
 * through typed out-parameters or as JSON strings allocated by the library
 * (release with dp_string_free).  Handles are opaque and freed with their
 * dedicated functions.  The library keeps no global state apart from a
 * thread-local error message (dp_last_error).
 */

#ifndef DUALPAIR_H
#define DUALPAIR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define DP_API __attribute__((visibility("default")))

typedef enum dp_status {
  DP_OK = 0,
  DP_ERR_INVALID_ARGUMENT = 1, /* bad input value or malformed text/JSON */
  DP_ERR_DOMAIN = 2,           /* operation outside its mathematical domain */
  DP_ERR_CAP_EXCEEDED = 3,     /* configured size cap exceeded */
  DP_ERR_VERIFY_FAILED = 4,    /* a verification suite reported a failure */
  DP_ERR_INTERNAL = 5
} dp_status;

/* Thread-local message for the most recent error in this thread. */
DP_API const char* dp_last_error(void);
DP_API const char* dp_version(void);
DP_API void dp_string_free(char* s);

typedef struct dp_poly dp_poly;
typedef struct dp_multivector dp_multivector;

/* ---------------- partitions ---------------- */

/* Partitions are passed as arrays of weakly decreasing positive parts
 * (length 0 for the zero partition). */

DP_API dp_status dp_partition_conjugate(const int64_t* parts, size_t len, int64_t* out,
                                        size_t out_capacity, size_t* out_len);
DP_API dp_status dp_lr_coefficient(const int64_t* lam, size_t lam_len, const int64_t* mu,
                                   size_t mu_len, const int64_t* nu, size_t nu_len,
                                   uint64_t* out);
DP_API dp_status dp_littlewood_so_multiplicity(const int64_t* mu, size_t mu_len,
                                               const int64_t* nu, size_t nu_len, uint64_t* out);
DP_API dp_status dp_schur_dim(const int64_t* lam, size_t lam_len, int64_t n, uint64_t* out);
DP_API dp_status dp_so_harmonic_dim(const int64_t* lam, size_t lam_len, int64_t m, uint64_t* out);
/* JSON: [{"mu":[...],"mu_conjugate":[...]}...] */
DP_API dp_status dp_cauchy_decompose(int64_t p, int64_t q, int64_t R, char** json_out);

/* ---------------- polynomial Fock model ---------------- */

/* Text format: sum of terms "coef*z[alpha,j]^e*...", coefficient written
 * "a/b+c/d*i".  JSON format: {"ambient":{"p":..,"q":..,"n":..},
 * "terms":[[[e_1,...,e_mn],[re_num,re_den,im_num,im_den]],...]} with the
 * dense exponent vector ordered by (alpha-1)*n + j. */

DP_API dp_status dp_poly_parse(int64_t p, int64_t q, int64_t n, const char* text, dp_poly** out);
DP_API dp_status dp_poly_clone(const dp_poly* src, dp_poly** out);
DP_API void dp_poly_free(dp_poly* p);
DP_API dp_status dp_poly_to_text(const dp_poly* p, char** out);
DP_API dp_status dp_poly_to_json(const dp_poly* p, char** out);
DP_API dp_status dp_poly_equal(const dp_poly* a, const dp_poly* b, int* out);

DP_API dp_status dp_poly_add(const dp_poly* a, const dp_poly* b, dp_poly** out);
DP_API dp_status dp_poly_mul(const dp_poly* a, const dp_poly* b, dp_poly** out);
DP_API dp_status dp_poly_partial(const dp_poly* p, int64_t alpha, int64_t j, dp_poly** out);
DP_API dp_status dp_poly_laplacian(const dp_poly* p, int64_t i, int64_t j, dp_poly** out);
DP_API dp_status dp_poly_is_pluriharmonic(const dp_poly* p, int* out);

/* kind: "wp" = w', "wpp" = w'', "t". alpha is ignored for kind "t". */
DP_API dp_status dp_witt(int64_t p, int64_t q, int64_t n, const char* kind, int64_t alpha,
                         int64_t j, dp_poly** out);
DP_API dp_status dp_minor_delta(int64_t p, int64_t q, int64_t n, int64_t k, dp_poly** out);

/* g_json: n x n matrix [[["re_num/re_den","im_num/im_den"],...],...], each
 * entry a Gaussian rational as a pair of rational strings.  sqrt_det_json
 * may be NULL; then a half-integral twist is carried formally and returned
 * in carried_num/carried_den. */
DP_API dp_status dp_gl_act(const dp_poly* p, const char* g_json, int64_t twist_num,
                           int64_t twist_den, const char* sqrt_det_json, dp_poly** out,
                           int64_t* carried_num, int64_t* carried_den);

/* kind: "raise", "lower", "mixed"; i, j are flattened indices 1..m*n. */
DP_API dp_status dp_sp_generator(const dp_poly* p, const char* kind, int64_t i, int64_t j,
                                 dp_poly** out);

/* cap = 0 reads DUALPAIR_NULLSPACE_CAP (default 2000). */
DP_API dp_status dp_harmonic_space_dim(int64_t p, int64_t n, int64_t ell, int64_t cap,
                                       int64_t* out);

/* ---------------- exterior algebra ---------------- */

DP_API void dp_mv_free(dp_multivector* mv);
DP_API dp_status dp_mv_clone(const dp_multivector* src, dp_multivector** out);
/* JSON: {"p":..,"q":..,"terms":[[[[alpha,mu],...],[re_num,re_den,im_num,im_den]],...]} */
DP_API dp_status dp_mv_to_json(const dp_multivector* mv, char** out);
DP_API dp_status dp_mv_from_json(const char* json, dp_multivector** out);
DP_API dp_status dp_mv_wedge(const dp_multivector* a, const dp_multivector* b,
                             dp_multivector** out);
DP_API dp_status dp_mv_is_zero(const dp_multivector* mv, int* out);
DP_API dp_status dp_mv_equal(const dp_multivector* a, const dp_multivector* b, int* out);
DP_API dp_status dp_curvature_form(int64_t p, int64_t q, int64_t mu, int64_t nu,
                                   dp_multivector** out);
DP_API dp_status dp_euler_form(int64_t p, int64_t q, dp_multivector** out);
DP_API dp_status dp_vz_vector(int64_t p, int64_t q, int64_t n, dp_multivector** out);

/* ---------------- cocycles ---------------- */

DP_API dp_status dp_km_value_on_vz(int64_t p, int64_t q, int64_t n, dp_poly** out);
/* xs_json: n rows of p Gaussian rationals (["re","im"] pairs as strings). */
DP_API dp_status dp_km_pair(int64_t p, int64_t q, int64_t n, const char* xs_json,
                            const dp_multivector* mv, char** value_json);
DP_API dp_status dp_fm_zero(int64_t p, int64_t q, int64_t n, const int64_t* I,
                            const int64_t* beta, size_t len, dp_poly** out);
DP_API dp_status dp_fm_highest_weight_value(int64_t p, int64_t q, int64_t n, const int64_t* a,
                                            size_t a_len, dp_poly** out);
DP_API dp_status dp_full_cocycle_value(int64_t p, int64_t q, int64_t n, const int64_t* a,
                                       size_t a_len, dp_poly** out);
/* JSON: {"weight":[...], "twist_num":m, "twist_den":2} (twist reported when
 * p >= 0 is supplied; pass p = -1 to omit). */
DP_API dp_status dp_vz_ktype_weight(int64_t n, int64_t q, const int64_t* lam, size_t lam_len,
                                    int64_t p, char** json_out);

/* ---------------- theta-stable parabolics ---------------- */

/* levi_json: {"u_blocks":[[p1,q1],...],"so_block":[p0,q0]} */
DP_API dp_status dp_dim_u_cap_p(const char* levi_json, int64_t p, int64_t q, int64_t* out);
DP_API dp_status dp_low_degree_levis(int64_t R, int64_t p, int64_t q, char** json_out);
/* family: "so_n_1_trivial" (parameter = q), "so_n_1_weight1" (parameter
 * ignored), "so_n_2_trivial" (parameter = r).  JSON: {"degrees":{"k":dim}} */
DP_API dp_status dp_cohomology_degrees(const char* family, int64_t n, int64_t parameter,
                                       char** json_out);

/* ---------------- Arthur parameters ---------------- */

/* psi_json: {"m":..., "factors":[{"char":{"kind":"quadratic","sign":1} |
 * {"kind":"unitary","weight":w,"shift":"a/b"} | {"kind":"discrete","k":k},
 * "a":sl2dim}, ...]} */
DP_API dp_status dp_arthur_validate(const char* psi_json, char** report_json);
DP_API dp_status dp_infinitesimal_character(const char* psi_json, char** json_out);
/* reading: "paired" (default) or "scaled". */
DP_API dp_status dp_exponents(const char* psi_json, const char* reading, char** json_out);
DP_API dp_status dp_aj_parameter(const char* levi_json, int64_t p, int64_t q, char** psi_json);
/* request_json: {"psi":{...}?, "n":..., "p":..., "q":..., "r":...} */
DP_API dp_status dp_predicates(const char* request_json, char** json_out);

/* ---------------- verification suites ---------------- */

/* suite: "all" or one of the named checks; JSON report with per-check
 * pass/fail.  Returns DP_ERR_VERIFY_FAILED when any check fails. */
DP_API dp_status dp_verify(const char* suite, char** report_json);
DP_API dp_status dp_verify_suites(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* DUALPAIR_H */
