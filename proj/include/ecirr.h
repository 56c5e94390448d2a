/*
   Copyright 2026 The ecirr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface to libecirr.
 *
 * Every fallible call returns an ecirr_status; ECIRR_OK is zero. On failure
 * ecirr_last_error() describes the problem for the calling thread until its
 * next failing call. Objects are opaque handles released by the matching
 * *_free function (NULL is accepted). Strings returned through char** are
 * heap-allocated and released with ecirr_string_free. Handles are immutable
 * after construction and may be shared between threads.
 */
#ifndef ECIRR_H
#define ECIRR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ECIRR_API __declspec(dllexport)
#else
#define ECIRR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecirr_status {
    ECIRR_OK = 0,
    ECIRR_NOT_PRIME = 1,
    ECIRR_REDUCIBLE_MODULUS = 2,
    ECIRR_DEGREE_MISMATCH = 3,
    ECIRR_CONTEXT_MISMATCH = 4,
    ECIRR_DIVISION_BY_ZERO = 5,
    ECIRR_FIELD_TOO_LARGE = 6,
    ECIRR_BOTH_ZERO = 7,
    ECIRR_DEGREE_ZERO = 8,
    ECIRR_POINT_NOT_ON_CURVE = 9,
    ECIRR_SINGULAR_CURVE = 10,
    ECIRR_ORDER_MISMATCH = 11,
    ECIRR_NOT_DIVISIBLE = 12,
    ECIRR_DEGENERATE_ALPHA = 13,
    ECIRR_NOT_IN_ORDER = 14,
    ECIRR_SUBFIELD_MISMATCH = 15,
    ECIRR_NODE_NOT_FOUND = 16,
    ECIRR_IRREDUCIBILITY_VIOLATION = 17,
    ECIRR_EXHAUSTED_CHOICES = 18,
    ECIRR_FACTORIZATION_FAILED = 19,
    ECIRR_NOT_COPRIME = 20,
    ECIRR_INVALID_ARGUMENT = 21,
    ECIRR_PARSE = 22,
    ECIRR_IO = 23,
    ECIRR_INTERNAL = 24
} ecirr_status;

typedef struct ecirr_field ecirr_field;
typedef struct ecirr_poly ecirr_poly;
typedef struct ecirr_map ecirr_map;
typedef struct ecirr_curve ecirr_curve;
typedef struct ecirr_qint ecirr_qint;
typedef struct ecirr_graph ecirr_graph;
typedef struct ecirr_sequence ecirr_sequence;

/* ---- general ---------------------------------------------------------- */

ECIRR_API const char* ecirr_version(void);
/* "Ok", "NotPrime", ... ; "Unknown" for out-of-range values. */
ECIRR_API const char* ecirr_status_name(int status);
ECIRR_API const char* ecirr_last_error(void);
ECIRR_API void ecirr_string_free(char* s);
/* Enumeration cap in effect (ECIRR_ENUM_CAP or the built-in default). */
ECIRR_API uint64_t ecirr_enumeration_cap(void);
/* base^exp mod m for m > 0. */
ECIRR_API uint64_t ecirr_mod_pow(uint64_t base, uint64_t exp, uint64_t m);
/* Reads a whole file into a new string. */
ECIRR_API ecirr_status ecirr_read_file(const char* path, char** out);

/* ---- fields ----------------------------------------------------------- */

/* F_{p^n} = F_p[t]/(modulus); modulus is monic, little-endian, n + 1 entries.
 * For n == 1 the modulus may be NULL. */
ECIRR_API ecirr_status ecirr_field_new(uint64_t p, unsigned n, const int64_t* modulus, size_t len,
                                       ecirr_field** out);
/* F_{p^n} with the lexicographically first irreducible modulus. */
ECIRR_API ecirr_status ecirr_field_standard(uint64_t p, unsigned n, ecirr_field** out);
ECIRR_API ecirr_status ecirr_field_from_json(const char* json, ecirr_field** out);
ECIRR_API ecirr_status ecirr_field_to_json(const ecirr_field* k, char** out);
ECIRR_API uint64_t ecirr_field_p(const ecirr_field* k);
ECIRR_API unsigned ecirr_field_degree(const ecirr_field* k);
ECIRR_API uint64_t ecirr_field_order(const ecirr_field* k);
ECIRR_API void ecirr_field_free(ecirr_field* k);

/* ---- polynomials ------------------------------------------------------ */

ECIRR_API ecirr_status ecirr_poly_from_ints(const ecirr_field* k, const int64_t* coeffs, size_t len,
                                            ecirr_poly** out);
/* JSON array of coefficients, little-endian. */
ECIRR_API ecirr_status ecirr_poly_from_json(const ecirr_field* k, const char* json, ecirr_poly** out);
ECIRR_API ecirr_status ecirr_poly_to_json(const ecirr_poly* f, char** out);
/* -1 for the zero polynomial. */
ECIRR_API int ecirr_poly_degree(const ecirr_poly* f);
ECIRR_API uint64_t ecirr_poly_fingerprint(const ecirr_poly* f);
ECIRR_API int ecirr_poly_is_monic(const ecirr_poly* f);
ECIRR_API int ecirr_poly_equal(const ecirr_poly* f, const ecirr_poly* g);
ECIRR_API ecirr_status ecirr_poly_is_irreducible(const ecirr_poly* f, int* out);
/* {"unit": ..., "factors": [{"degree", "multiplicity", "poly"}, ...]} */
ECIRR_API ecirr_status ecirr_poly_factor_json(const ecirr_poly* f, uint64_t seed, char** out);
ECIRR_API void ecirr_poly_free(ecirr_poly* f);

/* ---- rational maps ---------------------------------------------------- */

/* {"a", "b", "l", "s_num"?, "s_den"?, "field"?}. field may be NULL when the
 * document carries its own; a non-NULL field takes precedence. */
ECIRR_API ecirr_status ecirr_map_from_json(const ecirr_field* k, const char* json, ecirr_map** out);
ECIRR_API ecirr_status ecirr_map_to_json(const ecirr_map* m, char** out);
ECIRR_API ecirr_status ecirr_map_field(const ecirr_map* m, ecirr_field** out);
ECIRR_API unsigned ecirr_map_degree(const ecirr_map* m);
/* g^r = b^deg g * g(a/b). */
ECIRR_API ecirr_status ecirr_map_transform(const ecirr_map* m, const ecirr_poly* g, ecirr_poly** out);
ECIRR_API void ecirr_map_free(ecirr_map* m);

/* ---- curves ----------------------------------------------------------- */

/* {"A", "B", "field"}; a non-NULL field overrides the embedded one. */
ECIRR_API ecirr_status ecirr_curve_from_json(const ecirr_field* k, const char* json, ecirr_curve** out);
ECIRR_API ecirr_status ecirr_curve_field(const ecirr_curve* c, ecirr_field** out);
/* {"points", "trace", "ordinary"} by exhaustive counting. */
ECIRR_API ecirr_status ecirr_curve_count_points_json(const ecirr_curve* c, char** out);
/* Endomorphism report; the map is lifted when it lives over the prime field. */
ECIRR_API ecirr_status ecirr_curve_verify_endo_json(const ecirr_curve* c, const ecirr_map* m, uint64_t samples,
                                                    uint64_t seed, char** out);
ECIRR_API void ecirr_curve_free(ecirr_curve* c);

/* ---- imaginary quadratic orders --------------------------------------- */

/* {"D", "c0", "c1"}: c0 + c1 w in the maximal order of Q(sqrt(D)). */
ECIRR_API ecirr_status ecirr_qint_from_json(const char* json, ecirr_qint** out);
ECIRR_API ecirr_status ecirr_qint_new(long D, const char* c0, const char* c1, ecirr_qint** out);
ECIRR_API ecirr_status ecirr_qint_to_json(const ecirr_qint* x, char** out);
ECIRR_API ecirr_status ecirr_qint_norm(const ecirr_qint* x, char** out);
ECIRR_API void ecirr_qint_free(ecirr_qint* x);
/* {"k", "cofactor"} */
ECIRR_API ecirr_status ecirr_qint_valuation_json(const ecirr_qint* beta, const ecirr_qint* alpha, char** out);
/* {"base", "values", "hypothesis_met", "holds"} for delta^e - 1, e = 1..l. */
ECIRR_API ecirr_status ecirr_val_lemma_json(const ecirr_qint* delta, const ecirr_qint* alpha, uint64_t l,
                                            char** out);
/* Both roots of z^2 - t z + q; q is a decimal string. */
ECIRR_API ecirr_status ecirr_frobenius_from_trace(long D, long t, const char* q, ecirr_qint** pi,
                                                  ecirr_qint** pi_conj);
/* nu_alpha(pi^(2d) - 1) and nu_alpha(conj(pi)^(2d) - 1). */
ECIRR_API ecirr_status ecirr_k0_candidates(const ecirr_qint* pi, const ecirr_qint* alpha, uint64_t d,
                                           uint64_t* k_pi, uint64_t* k_conj);

/* ---- functional graphs ------------------------------------------------ */

ECIRR_API ecirr_status ecirr_graph_build(const ecirr_map* m, const ecirr_field* k, ecirr_graph** out);
ECIRR_API uint64_t ecirr_graph_node_count(const ecirr_graph* g);
/* Components, depth summaries and subfield tree profiles. */
ECIRR_API ecirr_status ecirr_graph_summary_json(const ecirr_graph* g, unsigned subfield_deg, char** out);
ECIRR_API ecirr_status ecirr_graph_dot(const ecirr_graph* g, char** out);
/* start is a JSON field element or "inf"; {"tail": [...], "cycle": [...]} */
ECIRR_API ecirr_status ecirr_graph_trajectory_json(const ecirr_graph* g, const char* start, char** out);
ECIRR_API void ecirr_graph_free(ecirr_graph* g);

/* ---- irreducible sequences -------------------------------------------- */

typedef struct ecirr_sequence_options {
    unsigned d;                 /* deg f_0; 0 means take it from f_0 */
    int64_t k0;                 /* factorization budget; negative when unknown */
    const char* selection;      /* NULL for "largest-degree" */
    uint64_t max_sub1_steps;    /* budget without k0 */
    int verify_sub2;            /* -1 automatic, 0 off, 1 on */
    uint64_t verify_degree_cap; /* automatic verification below this degree */
    uint64_t seed;
} ecirr_sequence_options;

ECIRR_API void ecirr_sequence_options_init(ecirr_sequence_options* opts);
ECIRR_API ecirr_status ecirr_sequence_run(const ecirr_map* m, const ecirr_poly* f0, uint64_t target,
                                          const ecirr_sequence_options* opts, ecirr_sequence** out);
ECIRR_API size_t ecirr_sequence_length(const ecirr_sequence* s);
ECIRR_API ecirr_status ecirr_sequence_poly(const ecirr_sequence* s, size_t index, ecirr_poly** out);
/* Polynomials of degree above full_cap are reported as degree + fingerprint. */
ECIRR_API ecirr_status ecirr_sequence_json(const ecirr_sequence* s, size_t full_cap, char** out);
ECIRR_API void ecirr_sequence_free(ecirr_sequence* s);

#ifdef __cplusplus
}
#endif

#endif /* ECIRR_H */
