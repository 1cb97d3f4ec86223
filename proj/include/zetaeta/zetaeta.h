#ifndef ZETAETA_H
#define ZETAETA_H

/*
 * C interface to the zetaeta library.
 *
 * Every fallible call returns a ze_status; on failure the thread-local
 * message from ze_last_error_message() describes the cause. Objects are
 * opaque handles released with the matching *_free function (NULL is
 * accepted). A NULL ze_eval_config pointer selects the defaults.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define ZE_API __declspec(dllexport)
#else
#  define ZE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ze_status {
    ZE_OK = 0,
    ZE_ERR_POLE = 1,
    ZE_ERR_DOMAIN = 2,
    ZE_ERR_CONSISTENCY = 3,
    ZE_ERR_COMPLETENESS = 4,
    ZE_ERR_FORMAT = 5,
    ZE_ERR_VALIDATION = 6,
    ZE_ERR_CONFIG = 7,
    ZE_ERR_DENSITY = 8,
    ZE_ERR_INVALID_ARGUMENT = 9,
    ZE_ERR_IO = 10,
    ZE_ERR_BUFFER_TOO_SMALL = 11,
    ZE_ERR_INTERNAL = 100
} ze_status;

typedef struct ze_complex {
    double re;
    double im;
} ze_complex;

typedef struct ze_eval_config {
    int em_terms;
    int bernoulli_order;
    double target_abs_error;
} ze_eval_config;

typedef struct ze_zero_list ze_zero_list;
typedef struct ze_product ze_product;
typedef struct ze_point_set ze_point_set;
typedef struct ze_report ze_report;

typedef struct ze_scan_row {
    double sigma;
    ze_complex value;
    double tail_bound;
    size_t n_terms;
} ze_scan_row;

/* Strings point into the report and live as long as it does. */
typedef struct ze_report_record {
    const char * case_name;
    const char * sample;
    double lhs;
    double rhs;
    double residual;
    const char * verdict;
} ze_report_record;

typedef struct ze_field {
    int64_t discriminant;
    int r1;
    int r2;
    int64_t class_number;
    double regulator;
    int roots_of_unity;
} ze_field;

ZE_API const char * ze_last_error_message(void);
ZE_API const char * ze_status_name(ze_status status);
ZE_API void ze_eval_config_init(ze_eval_config * cfg);

/* special functions */
ZE_API ze_status ze_gamma(ze_complex s, ze_complex * out);
ZE_API ze_status ze_log_gamma(ze_complex s, ze_complex * out);
ZE_API ze_status ze_zeta(const ze_eval_config * cfg, ze_complex s, ze_complex * out);
ZE_API ze_status ze_xi(const ze_eval_config * cfg, ze_complex s, ze_complex * out);
ZE_API ze_status ze_theta(double t, double * out);
ZE_API ze_status ze_hardy_z(const ze_eval_config * cfg, double t, double * out);

/* zero lists */
ZE_API ze_status ze_zero_list_find(const ze_eval_config * cfg, double t_max, ze_zero_list ** out);
ZE_API ze_status ze_zero_list_first(const ze_eval_config * cfg, size_t count, ze_zero_list ** out);
ZE_API ze_status ze_zero_list_load(const char * path, ze_zero_list ** out);
ZE_API ze_status ze_zero_list_save(const ze_zero_list * list, const char * path);
/* Loads `path` (NULL: the default cache) or builds and stores min_count zeros. */
ZE_API ze_status ze_zero_list_cached(const char * path, size_t min_count,
                                     const ze_eval_config * cfg, ze_zero_list ** out);
ZE_API ze_status ze_zero_list_validate(ze_zero_list * list, const ze_eval_config * cfg);
ZE_API size_t ze_zero_list_size(const ze_zero_list * list);
ZE_API double ze_zero_list_at(const ze_zero_list * list, size_t index);
ZE_API double ze_zero_list_max_t(const ze_zero_list * list);
ZE_API const char * ze_zero_list_tag(const ze_zero_list * list);
ZE_API void ze_zero_list_free(ze_zero_list * list);
/* Writes the default cache path; ZE_ERR_BUFFER_TOO_SMALL if it does not fit. */
ZE_API ze_status ze_default_cache_path(char * buffer, size_t size);

/* truncated products h_N and eta_N (Riemann or quadratic-field flavour) */
ZE_API ze_status ze_product_new(const ze_zero_list * zeros, size_t n_terms,
                                double leading_constant, const ze_eval_config * cfg,
                                ze_product ** out);
ZE_API ze_status ze_product_new_kappa(const ze_field * field, const ze_zero_list * zeros,
                                      size_t n_terms, const ze_eval_config * cfg,
                                      ze_product ** out);
ZE_API void ze_product_free(ze_product * product);
ZE_API size_t ze_product_n_terms(const ze_product * product);
ZE_API ze_status ze_product_h(const ze_product * product, ze_complex s, ze_complex * out);
ZE_API ze_status ze_product_eta(const ze_product * product, const ze_eval_config * cfg,
                                ze_complex s, ze_complex * out);
ZE_API ze_status ze_product_fe_residual(const ze_product * product, const ze_eval_config * cfg,
                                        ze_complex s, double * out);
ZE_API ze_status ze_product_residue(const ze_product * product, const ze_eval_config * cfg,
                                    double * symbolic, double * numeric);
ZE_API ze_status ze_product_sigma_scan(const ze_product * product, const ze_eval_config * cfg,
                                       const double * sigmas, size_t count, ze_scan_row * rows);

/* point sets and disc counts */
ZE_API ze_status ze_point_set_counterexample(int64_t k_lo, int64_t k_hi, ze_point_set ** out);
ZE_API ze_status ze_point_set_from_zeros(const ze_zero_list * zeros, int symmetrize,
                                         ze_point_set ** out);
ZE_API size_t ze_point_set_size(const ze_point_set * set);
ZE_API ze_status ze_point_set_disc_count(const ze_point_set * set, double r, size_t * out);
ZE_API ze_status ze_point_set_density(const ze_point_set * set, const double * radii,
                                      size_t count, double * slopes);
ZE_API void ze_point_set_free(ze_point_set * set);

/* experiment reports; `zeros` is required only by the eta case, which uses
 * its first n_terms ordinates (0: all of them) */
ZE_API ze_status ze_fe_check(const char * case_name, size_t samples, uint64_t seed,
                             const ze_zero_list * zeros, size_t n_terms,
                             const ze_eval_config * cfg, ze_report ** out);
ZE_API ze_status ze_uniqueness(const char * case_name, const ze_eval_config * cfg,
                               ze_report ** out);
ZE_API size_t ze_report_size(const ze_report * report);
ZE_API ze_status ze_report_get(const ze_report * report, size_t index, ze_report_record * out);
ZE_API int ze_report_passed(const ze_report * report);
ZE_API void ze_report_free(ze_report * report);

/* quadratic fields */
ZE_API ze_status ze_field_lookup(int64_t discriminant, const char * override_path, ze_field * out);
ZE_API ze_status ze_kronecker(int64_t discriminant, uint64_t n, int * out);
/* out[i] = a(i + 1) for i < limit */
ZE_API ze_status ze_ideal_counts(const ze_field * field, size_t limit, uint32_t * out);
ZE_API ze_status ze_dirichlet_l(const ze_eval_config * cfg, int64_t discriminant, ze_complex s,
                                ze_complex * out);
ZE_API ze_status ze_zeta_kappa(const ze_field * field, const ze_eval_config * cfg, ze_complex s,
                               ze_complex * out);
ZE_API ze_status ze_residue_check(const ze_field * field, const ze_eval_config * cfg,
                                  double * numeric, double * formula, double * rel_err);
ZE_API ze_status ze_l_zeros(int64_t discriminant, double t_max, const ze_eval_config * cfg,
                            ze_zero_list ** out);
ZE_API ze_status ze_kappa_zeros(const ze_field * field, double t_max, const ze_eval_config * cfg,
                                ze_zero_list ** out);
ZE_API ze_status ze_kappa_first_zeros(const ze_field * field, size_t count,
                                      const ze_eval_config * cfg, ze_zero_list ** out);

#ifdef __cplusplus
}
#endif

#endif
