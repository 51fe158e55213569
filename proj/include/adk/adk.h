/* C interface to the divisorial-valuation library: opaque handles, status
 * codes, canonical text renderings. Every object created here is owned by
 * the caller and released with the matching destroy function; strings
 * returned through char** outputs are released with adk_string_free. */

#ifndef ADK_H
#define ADK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adk_status {
  ADK_OK = 0,
  ADK_ERR_ZERO_POLYNOMIAL = 1,
  ADK_ERR_UNIT_ELEMENT = 2,
  ADK_ERR_SYNTAX = 3,
  ADK_ERR_NON_INTEGER_EXPONENT = 4,
  ADK_ERR_UNKNOWN_VARIABLE = 5,
  ADK_ERR_NOT_COPRIME = 6,
  ADK_ERR_REDUCIBLE_MODULUS = 7,
  ADK_ERR_EXTENSION_FACTORIZATION_UNSUPPORTED = 8,
  ADK_ERR_MISMATCHED_DIVISOR_SETS = 9,
  ADK_ERR_ALL_GENERATORS_ZERO = 10,
  ADK_ERR_LEVEL_EXCEEDS_BOUND = 11,
  ADK_ERR_INVALID_ARGUMENT = 12,
  ADK_ERR_OTHER = 13
} adk_status;

typedef struct adk_field adk_field;
typedef struct adk_poly adk_poly;
typedef struct adk_path adk_path;
typedef struct adk_divisor_set adk_divisor_set;

/* Message / parse position of the last failing call on this thread. */
const char* adk_last_error(void);
long adk_last_error_position(void);

void adk_string_free(char* s);

/* -------------------------------------------------------------- fields */

/* spec: "q" | "fp:<p>" | "ext:<base>:<modulus in t>" */
adk_status adk_field_create(const char* spec, adk_field** out);
adk_status adk_field_extend(const adk_field* base, const char* modulus, adk_field** out);
void adk_field_destroy(adk_field* f);
adk_status adk_field_describe(const adk_field* f, char** out);
adk_status adk_field_info(const adk_field* f, uint64_t* characteristic,
                          unsigned* absolute_degree, int* modulus_verified);
/* univariate expression in t evaluated at the extension generator */
adk_status adk_field_eval(const adk_field* f, const char* expr, char** out);
/* canonical factorization of a univariate polynomial over the field */
adk_status adk_factor_univariate(const adk_field* f, const char* poly, char** out);

/* --------------------------------------------------------- polynomials */

adk_status adk_poly_parse(const adk_field* f, const char* text, adk_poly** out);
void adk_poly_destroy(adk_poly* p);
adk_status adk_poly_render(const adk_poly* p, char** out);
adk_status adk_poly_ord(const adk_poly* p, uint32_t* out);
adk_status adk_poly_leading_form(const adk_poly* p, adk_poly** out);
adk_status adk_poly_gcd(const adk_poly* a, const adk_poly* b, adk_poly** out);
/* center: "inf" or a field-element literal */
adk_status adk_poly_transform(const adk_poly* p, const char* center, uint32_t* m_out,
                              adk_poly** strict_out);
adk_status adk_poly_pullback(const adk_poly* p, const adk_path* path, adk_poly** out);
adk_status adk_poly_strict_transform(const adk_poly* p, const adk_path* path, adk_poly** out);

/* --------------------------------------------------------------- paths */

/* "[0, inf, 1/2]"; extension-entering centers as "root(<modulus>)#<k>" */
adk_status adk_path_parse(const adk_field* f, const char* text, adk_path** out);
void adk_path_destroy(adk_path* p);
adk_status adk_path_render(const adk_path* p, char** out);
adk_status adk_path_depth(const adk_path* p, uint32_t* out);
adk_status adk_monomial_path(const adk_field* f, unsigned a, unsigned b, adk_path** out);
adk_status adk_tangent_directions(const adk_poly* p, char** out);
adk_status adk_children_on_strict(const adk_poly* p, const adk_path* path, char** out);

/* ----------------------------------------------------------- valuation */

adk_status adk_val(const adk_poly* f, const adk_path* divisor, uint64_t* out);
adk_status adk_val_frac(const adk_poly* f, const adk_poly* g, const adk_path* divisor,
                        int64_t* value, int* is_infinite);
/* "Zero" | "Pole" | "Unit" | "Undetermined" */
adk_status adk_position(const adk_poly* f, const adk_poly* g, const adk_path* point,
                        char** out);

/* --------------------------------------------- bounded-level membership */

adk_status adk_member_bounded(const adk_poly* f, const adk_poly* g, unsigned level,
                              int* verdict, char** witness_path, int64_t* witness_delta);
/* JSON: {"level":d,"visited":[{"path":..,"delta":..}],
 *        "generic":[{"path":..,"sign":..}],
 *        "unresolved":[{"path":..,"factor":..}]} */
adk_status adk_value_profile(const adk_poly* f, const adk_poly* g, unsigned level,
                             char** json_out);
adk_status adk_classify_max_ideal(const adk_path* divisor, unsigned level,
                                  int* finitely_generated);
adk_status adk_jacobson_witness(const adk_poly* f, unsigned level, int* out);

/* ------------------------------------------ ideals of finite inter rings */

adk_status adk_divisor_set_create(adk_path* const* paths, size_t n, adk_divisor_set** out);
void adk_divisor_set_destroy(adk_divisor_set* s);
adk_status adk_divisor_set_size(const adk_divisor_set* s, size_t* out);
/* canonical-order index -> rendered divisor path */
adk_status adk_divisor_set_render(const adk_divisor_set* s, size_t index, char** out);
adk_status adk_ideal_values(const adk_divisor_set* s, adk_poly* const* gens, size_t n,
                            uint64_t* entries_out);
/* op: 0 intersect, 1 product, 2 sum */
adk_status adk_ideal_op(const adk_divisor_set* s, int op, const uint64_t* a,
                        const uint64_t* b, uint64_t* out);
adk_status adk_ideal_contains(const adk_divisor_set* s, const uint64_t* entries,
                              const adk_poly* f, int* out);
/* indices_out/exps_out must hold set-size entries; count_out gets the number
 * of positive components */
adk_status adk_ideal_decompose(const adk_divisor_set* s, const uint64_t* entries,
                               size_t* count_out, size_t* indices_out, uint64_t* exps_out);

/* ------------------------------------------------ Cantor-Bendixson sets */

/* expressions: single([..]) | children([..], exclude=[..]) | slice([..], k)
 * | branchtail([..], period=[..]) | branchlimit([..], period=[..]),
 * joined with +; {} is the empty set */
adk_status adk_cb_derivative(const char* expr, char** out);
adk_status adk_cb_rank(const char* expr, unsigned* rank_out, char** chain_out);
adk_status adk_cb_isolated(const char* expr, char** out);
adk_status adk_cb_limits_are_divisors(const char* expr, int* out);
adk_status adk_cb_is_limit_of_branch(const char* prefix, const char* period,
                                     const char* expr, int* out);

#ifdef __cplusplus
}
#endif

#endif /* ADK_H */
