/* Exercises the public C interface from plain C. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "zetaeta/zetaeta.h"

static int failures = 0;

#define EXPECT(cond)                                                            \
    do {                                                                        \
        if (!(cond)) {                                                          \
            fprintf(stderr, "%s:%d: expectation failed: %s (last error: %s)\n", \
                    __FILE__, __LINE__, #cond, ze_last_error_message());        \
            ++failures;                                                         \
        }                                                                       \
    } while (0)

static void special_functions(void)
{
    ze_complex s = {2.0, 0.0}, out;
    EXPECT(ze_zeta(NULL, s, &out) == ZE_OK);
    EXPECT(fabs(out.re - 1.6449340668482264) < 1e-14);
    EXPECT(strcmp(ze_last_error_message(), "") == 0);

    s.re = 1.0;
    EXPECT(ze_zeta(NULL, s, &out) == ZE_ERR_POLE);
    EXPECT(strstr(ze_last_error_message(), "pole") != NULL);
    EXPECT(strcmp(ze_status_name(ZE_ERR_POLE), "PoleError") == 0);
    EXPECT(strcmp(ze_status_name(ZE_OK), "ok") == 0);

    ze_eval_config cfg;
    ze_eval_config_init(&cfg);
    EXPECT(cfg.bernoulli_order == 30);
    cfg.bernoulli_order = 7;
    s.re = 2.0;
    EXPECT(ze_zeta(&cfg, s, &out) == ZE_ERR_CONFIG);
    EXPECT(ze_zeta(NULL, s, NULL) == ZE_ERR_INVALID_ARGUMENT);

    s.re = 0.5;
    EXPECT(ze_gamma(s, &out) == ZE_OK);
    EXPECT(fabs(out.re - 1.7724538509055160) < 1e-14);
    s.re = -1.0;
    EXPECT(ze_gamma(s, &out) == ZE_ERR_POLE);
    EXPECT(ze_log_gamma(s, &out) == ZE_ERR_DOMAIN);

    s.re = 0.0;
    EXPECT(ze_xi(NULL, s, &out) == ZE_OK);
    EXPECT(fabs(out.re - 0.5) < 1e-13);

    double v;
    EXPECT(ze_theta(100.0, &v) == ZE_OK);
    EXPECT(fabs(v - 87.972165231787219625) < 1e-10);
    EXPECT(ze_hardy_z(NULL, 10.0, &v) == ZE_OK);
    EXPECT(fabs(v + 1.5491945461810224) < 1e-10);
    EXPECT(ze_theta(-1.0, &v) == ZE_ERR_DOMAIN);
}

static void zero_lists_and_products(const char * scratch)
{
    ze_zero_list * zeros = NULL;
    EXPECT(ze_zero_list_first(NULL, 30, &zeros) == ZE_OK);
    EXPECT(ze_zero_list_size(zeros) >= 30);
    EXPECT(fabs(ze_zero_list_at(zeros, 0) - 14.134725141734694) < 1e-9);
    EXPECT(ze_zero_list_at(zeros, 100000) == 0.0);
    EXPECT(strcmp(ze_zero_list_tag(zeros), "zeta") == 0);
    EXPECT(ze_zero_list_find(NULL, 5.0, &zeros) == ZE_ERR_INVALID_ARGUMENT);

    char path[512];
    snprintf(path, sizeof path, "%s/capi-zeros.txt", scratch);
    EXPECT(ze_zero_list_save(zeros, path) == ZE_OK);
    ze_zero_list * loaded = NULL;
    EXPECT(ze_zero_list_load(path, &loaded) == ZE_OK);
    EXPECT(ze_zero_list_size(loaded) == ze_zero_list_size(zeros));
    EXPECT(ze_zero_list_validate(loaded, NULL) == ZE_OK);

    FILE * f = fopen(path, "w");
    fputs("not a cache\n", f);
    fclose(f);
    ze_zero_list * broken = NULL;
    EXPECT(ze_zero_list_load(path, &broken) == ZE_ERR_FORMAT);
    EXPECT(broken == NULL);

    ze_product * p = NULL;
    EXPECT(ze_product_new(zeros, 30, 0.5, NULL, &p) == ZE_OK);
    EXPECT(ze_product_n_terms(p) == 30);
    ze_complex s = {0.3, 7.0}, a, b;
    ze_complex t = {0.7, -7.0};
    EXPECT(ze_product_h(p, s, &a) == ZE_OK);
    EXPECT(ze_product_h(p, t, &b) == ZE_OK);
    EXPECT(hypot(a.re - b.re, a.im - b.im) < 1e-12 * (1.0 + hypot(a.re, a.im)));
    double r;
    EXPECT(ze_product_fe_residual(p, NULL, s, &r) == ZE_OK);
    EXPECT(r < 1e-9);
    double sym = 0.0, num = 0.0;
    EXPECT(ze_product_residue(p, NULL, &sym, &num) == ZE_OK);
    EXPECT(sym == 1.0);
    EXPECT(fabs(num - 1.0) < 1e-5);
    double sigmas[2] = {2.0, 3.0};
    ze_scan_row rows[2];
    EXPECT(ze_product_sigma_scan(p, NULL, sigmas, 2, rows) == ZE_OK);
    EXPECT(rows[1].sigma == 3.0);
    EXPECT(rows[0].n_terms == 30);
    EXPECT(fabs(rows[0].value.re - 1.6449) < 0.05);
    sigmas[0] = 0.5;
    EXPECT(ze_product_sigma_scan(p, NULL, sigmas, 2, rows) == ZE_ERR_INVALID_ARGUMENT);
    s.re = 1.0;
    s.im = 0.0;
    EXPECT(ze_product_eta(p, NULL, s, &a) == ZE_ERR_POLE);
    ze_product_free(p);

    EXPECT(ze_product_new(zeros, 0, 0.5, NULL, &p) == ZE_ERR_INVALID_ARGUMENT);
    EXPECT(ze_product_new(zeros, 10, -1.0, NULL, &p) == ZE_ERR_INVALID_ARGUMENT);

    ze_point_set * set = NULL;
    EXPECT(ze_point_set_from_zeros(zeros, 1, &set) == ZE_OK);
    EXPECT(ze_point_set_size(set) == 2 * ze_zero_list_size(zeros));
    ze_point_set_free(set);
    EXPECT(ze_point_set_counterexample(-2000, 1999, &set) == ZE_OK);
    double radii[3] = {100.0, 200.0, 400.0}, slopes[3];
    EXPECT(ze_point_set_density(set, radii, 3, slopes) == ZE_OK);
    for (int i = 0; i < 3; ++i)
        EXPECT(fabs(slopes[i] / 0.44127016314141608 - 1.0) < 0.02);
    size_t count = 0;
    EXPECT(ze_point_set_disc_count(set, -1.0, &count) == ZE_ERR_INVALID_ARGUMENT);
    ze_point_set_free(set);

    ze_report * rep = NULL;
    EXPECT(ze_fe_check("eta", 5, 1, zeros, 20, NULL, &rep) == ZE_OK);
    EXPECT(ze_report_size(rep) == 5);
    EXPECT(ze_report_passed(rep) == 1);
    ze_report_record rec;
    EXPECT(ze_report_get(rep, 0, &rec) == ZE_OK);
    EXPECT(strcmp(rec.case_name, "eta-fe") == 0);
    EXPECT(strcmp(rec.verdict, "pass") == 0);
    EXPECT(ze_report_get(rep, 5, &rec) == ZE_ERR_INVALID_ARGUMENT);
    ze_report_free(rep);
    EXPECT(ze_fe_check("eta", 5, 1, NULL, 0, NULL, &rep) == ZE_ERR_INVALID_ARGUMENT);

    ze_zero_list_free(loaded);
    ze_zero_list_free(zeros);
}

static void reports(void)
{
    ze_report * rep = NULL;
    EXPECT(ze_uniqueness("order2", NULL, &rep) == ZE_OK);
    EXPECT(ze_report_passed(rep) == 1);
    ze_report_free(rep);
    EXPECT(ze_uniqueness("limit0", NULL, &rep) == ZE_OK);
    EXPECT(ze_report_passed(rep) == 0);
    ze_report_free(rep);
    EXPECT(ze_uniqueness("bogus", NULL, &rep) == ZE_ERR_INVALID_ARGUMENT);
    EXPECT(ze_fe_check("zeta", 0, 1, NULL, 0, NULL, &rep) == ZE_ERR_INVALID_ARGUMENT);

    char small[4];
    EXPECT(ze_default_cache_path(small, sizeof small) == ZE_ERR_BUFFER_TOO_SMALL);
    char big[1024];
    EXPECT(ze_default_cache_path(big, sizeof big) == ZE_OK);
    EXPECT(strstr(big, "zeta-zeros.txt") != NULL);
}

static void dedekind(void)
{
    ze_field field;
    EXPECT(ze_field_lookup(-4, NULL, &field) == ZE_OK);
    EXPECT(field.roots_of_unity == 4);
    EXPECT(ze_field_lookup(-7, NULL, &field) == ZE_ERR_INVALID_ARGUMENT);
    EXPECT(ze_field_lookup(-4, NULL, &field) == ZE_OK);

    int chi = 0;
    EXPECT(ze_kronecker(-4, 3, &chi) == ZE_OK);
    EXPECT(chi == -1);

    uint32_t counts[25];
    EXPECT(ze_ideal_counts(&field, 25, counts) == ZE_OK);
    EXPECT(counts[0] == 1);
    EXPECT(counts[4] == 2);  /* a(5) */
    EXPECT(counts[24] == 3); /* a(25) */

    ze_complex s = {2.0, 0.0}, out;
    EXPECT(ze_dirichlet_l(NULL, -4, s, &out) == ZE_OK);
    EXPECT(fabs(out.re - 0.91596559417721901505) < 1e-12);
    EXPECT(ze_zeta_kappa(&field, NULL, s, &out) == ZE_OK);
    EXPECT(fabs(out.re - 1.5067030099229850309) < 1e-11);

    double numeric, formula, rel;
    EXPECT(ze_residue_check(&field, NULL, &numeric, &formula, &rel) == ZE_OK);
    EXPECT(fabs(numeric - 0.78539816339744831) < 1e-4);

    ze_zero_list * lz = NULL;
    EXPECT(ze_l_zeros(-4, 10.0, NULL, &lz) == ZE_OK);
    EXPECT(ze_zero_list_size(lz) == 1);
    EXPECT(fabs(ze_zero_list_at(lz, 0) - 6.0209489046976) < 1e-4);
    ze_zero_list_free(lz);

    ze_zero_list * kz = NULL;
    EXPECT(ze_kappa_zeros(&field, 15.0, NULL, &kz) == ZE_OK);
    EXPECT(ze_zero_list_size(kz) == 4);
    ze_zero_list_free(kz);

    EXPECT(ze_kappa_first_zeros(&field, 20, NULL, &kz) == ZE_OK);
    ze_product * p = NULL;
    EXPECT(ze_product_new_kappa(&field, kz, 20, NULL, &p) == ZE_OK);
    double sym = 0.0;
    EXPECT(ze_product_residue(p, NULL, &sym, NULL) == ZE_OK);
    EXPECT(fabs(sym - 0.78539816339744831) < 1e-12);
    ze_product_free(p);
    ze_zero_list_free(kz);

    field.class_number = 0;
    EXPECT(ze_zeta_kappa(&field, NULL, s, &out) == ZE_ERR_INVALID_ARGUMENT);
}

int main(int argc, char ** argv)
{
    const char * scratch = argc > 1 ? argv[1] : ".";
    special_functions();
    zero_lists_and_products(scratch);
    reports();
    dedekind();
    ze_product_free(NULL);
    ze_zero_list_free(NULL);
    ze_report_free(NULL);
    ze_point_set_free(NULL);
    if (failures) {
        fprintf(stderr, "%d expectation(s) failed\n", failures);
        return 1;
    }
    puts("C API: all expectations met");
    return 0;
}
