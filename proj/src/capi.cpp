#include "zetaeta/zetaeta.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "zetaeta/dedekind.hpp"
#include "zetaeta/eta_builder.hpp"
#include "zetaeta/reports.hpp"
#include "zetaeta/special_functions.hpp"
#include "zetaeta/uniqueness.hpp"
#include "zetaeta/zero_finder.hpp"

using namespace zetaeta;

struct ze_zero_list
{
    ZeroList list;
};

struct ze_product
{
    std::optional<QuadraticFieldData> field;
    TruncatedProductSpec spec;
};

struct ze_point_set
{
    PointSet set;
};

struct ze_report
{
    Report report;
};

namespace {

thread_local std::string g_last_error;

ze_status fail(ze_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

template <class F>
ze_status guard(F && body)
{
    try {
        body();
        g_last_error.clear();
        return ZE_OK;
    } catch (Error const & e) {
        return fail(static_cast<ze_status>(e.code()), e.what());
    } catch (std::bad_alloc const &) {
        return fail(ZE_ERR_INTERNAL, "out of memory");
    } catch (std::exception const & e) {
        return fail(ZE_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ZE_ERR_INTERNAL, "unknown error");
    }
}

EvalConfig to_cfg(ze_eval_config const * cfg)
{
    EvalConfig out;
    if (cfg) {
        out.em_terms = cfg->em_terms;
        out.bernoulli_order = cfg->bernoulli_order;
        out.target_abs_error = cfg->target_abs_error;
    }
    out.validate();
    return out;
}

Complex to_cpp(ze_complex z) { return {z.re, z.im}; }
ze_complex to_c(Complex z) { return {z.real(), z.imag()}; }

QuadraticFieldData to_cpp(ze_field const & f)
{
    QuadraticFieldData out{f.discriminant, f.r1, f.r2, f.class_number, f.regulator,
                           f.roots_of_unity};
    out.validate();
    return out;
}

template <class T>
void require(T const * p, char const * what)
{
    if (p == nullptr)
        throw InvalidArgument(std::string(what) + " must not be NULL");
}

} // namespace

extern "C" {

const char * ze_last_error_message(void)
{
    return g_last_error.c_str();
}

const char * ze_status_name(ze_status status)
{
    switch (status) {
    case ZE_OK: return "ok";
    case ZE_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case ZE_ERR_INTERNAL: return "InternalError";
    default:
        if (status >= ZE_ERR_POLE && status <= ZE_ERR_IO)
            return error_code_name(static_cast<ErrorCode>(status));
        return "UnknownStatus";
    }
}

void ze_eval_config_init(ze_eval_config * cfg)
{
    if (!cfg)
        return;
    EvalConfig const d;
    cfg->em_terms = d.em_terms;
    cfg->bernoulli_order = d.bernoulli_order;
    cfg->target_abs_error = d.target_abs_error;
}

ze_status ze_gamma(ze_complex s, ze_complex * out)
{
    return guard([&] {
        require(out, "out");
        *out = to_c(complex_gamma(to_cpp(s)));
    });
}

ze_status ze_log_gamma(ze_complex s, ze_complex * out)
{
    return guard([&] {
        require(out, "out");
        *out = to_c(complex_log_gamma(to_cpp(s)));
    });
}

ze_status ze_zeta(const ze_eval_config * cfg, ze_complex s, ze_complex * out)
{
    return guard([&] {
        require(out, "out");
        *out = to_c(complex_zeta(to_cpp(s), to_cfg(cfg)));
    });
}

ze_status ze_xi(const ze_eval_config * cfg, ze_complex s, ze_complex * out)
{
    return guard([&] {
        require(out, "out");
        *out = to_c(xi(to_cpp(s), to_cfg(cfg)));
    });
}

ze_status ze_theta(double t, double * out)
{
    return guard([&] {
        require(out, "out");
        *out = riemann_siegel_theta(t);
    });
}

ze_status ze_hardy_z(const ze_eval_config * cfg, double t, double * out)
{
    return guard([&] {
        require(out, "out");
        *out = hardy_Z(t, to_cfg(cfg));
    });
}

ze_status ze_zero_list_find(const ze_eval_config * cfg, double t_max, ze_zero_list ** out)
{
    return guard([&] {
        require(out, "out");
        *out = new ze_zero_list{find_zeros_up_to(t_max, to_cfg(cfg))};
    });
}

ze_status ze_zero_list_first(const ze_eval_config * cfg, size_t count, ze_zero_list ** out)
{
    return guard([&] {
        require(out, "out");
        *out = new ze_zero_list{find_first_zeros(count, to_cfg(cfg))};
    });
}

ze_status ze_zero_list_load(const char * path, ze_zero_list ** out)
{
    return guard([&] {
        require(path, "path");
        require(out, "out");
        *out = new ze_zero_list{load_zeros(path)};
    });
}

ze_status ze_zero_list_save(const ze_zero_list * list, const char * path)
{
    return guard([&] {
        require(list, "list");
        require(path, "path");
        save_zeros(list->list, path);
    });
}

ze_status ze_zero_list_cached(const char * path, size_t min_count, const ze_eval_config * cfg,
                              ze_zero_list ** out)
{
    return guard([&] {
        require(out, "out");
        std::string const p = path ? std::string(path) : default_zero_cache_path();
        *out = new ze_zero_list{ensure_zero_cache(p, min_count, to_cfg(cfg))};
    });
}

ze_status ze_zero_list_validate(ze_zero_list * list, const ze_eval_config * cfg)
{
    return guard([&] {
        require(list, "list");
        ensure_validated(list->list, {}, to_cfg(cfg));
    });
}

size_t ze_zero_list_size(const ze_zero_list * list)
{
    return list ? list->list.size() : 0;
}

double ze_zero_list_at(const ze_zero_list * list, size_t index)
{
    if (!list || index >= list->list.size())
        return 0.0;
    return list->list.ordinates[index];
}

double ze_zero_list_max_t(const ze_zero_list * list)
{
    return list ? list->list.max_t_searched : 0.0;
}

const char * ze_zero_list_tag(const ze_zero_list * list)
{
    return list ? list->list.source_tag.c_str() : "";
}

void ze_zero_list_free(ze_zero_list * list)
{
    delete list;
}

ze_status ze_default_cache_path(char * buffer, size_t size)
{
    std::string p;
    ze_status const st = guard([&] {
        require(buffer, "buffer");
        p = default_zero_cache_path();
    });
    if (st != ZE_OK)
        return st;
    if (p.size() + 1 > size)
        return fail(ZE_ERR_BUFFER_TOO_SMALL, "cache path needs " + std::to_string(p.size() + 1)
                                                 + " bytes");
    std::memcpy(buffer, p.c_str(), p.size() + 1);
    return ZE_OK;
}

ze_status ze_product_new(const ze_zero_list * zeros, size_t n_terms, double leading_constant,
                         const ze_eval_config * cfg, ze_product ** out)
{
    return guard([&] {
        require(zeros, "zeros");
        require(out, "out");
        *out = new ze_product{std::nullopt,
                              TruncatedProductSpec(zeros->list, n_terms, leading_constant, {},
                                                   to_cfg(cfg))};
    });
}

ze_status ze_product_new_kappa(const ze_field * field, const ze_zero_list * zeros,
                               size_t n_terms, const ze_eval_config * cfg, ze_product ** out)
{
    return guard([&] {
        require(field, "field");
        require(zeros, "zeros");
        require(out, "out");
        QuadraticFieldData const f = to_cpp(*field);
        *out = new ze_product{f, kappa_product_spec(f, zeros->list, n_terms, to_cfg(cfg))};
    });
}

void ze_product_free(ze_product * product)
{
    delete product;
}

size_t ze_product_n_terms(const ze_product * product)
{
    return product ? product->spec.n_terms() : 0;
}

ze_status ze_product_h(const ze_product * product, ze_complex s, ze_complex * out)
{
    return guard([&] {
        require(product, "product");
        require(out, "out");
        *out = to_c(h_truncated(product->spec, to_cpp(s)));
    });
}

ze_status ze_product_eta(const ze_product * product, const ze_eval_config * cfg, ze_complex s,
                         ze_complex * out)
{
    return guard([&] {
        require(product, "product");
        require(out, "out");
        EvalConfig const c = to_cfg(cfg);
        *out = to_c(product->field
                        ? eta_kappa_truncated(*product->field, product->spec, to_cpp(s), c)
                        : eta_truncated(product->spec, to_cpp(s), c));
    });
}

ze_status ze_product_fe_residual(const ze_product * product, const ze_eval_config * cfg,
                                 ze_complex s, double * out)
{
    return guard([&] {
        require(product, "product");
        require(out, "out");
        EvalConfig const c = to_cfg(cfg);
        *out = product->field
                   ? eta_kappa_fe_residual(*product->field, product->spec, to_cpp(s), c)
                   : eta_fe_residual(product->spec, to_cpp(s), c);
    });
}

ze_status ze_product_residue(const ze_product * product, const ze_eval_config * cfg,
                             double * symbolic, double * numeric)
{
    return guard([&] {
        require(product, "product");
        EvalConfig const c = to_cfg(cfg);
        if (product->field) {
            if (symbolic)
                *symbolic = eta_kappa_residue_symbolic(*product->field, product->spec);
            if (numeric)
                *numeric = eta_kappa_residue_numeric(*product->field, product->spec, 1e-6, c);
        } else {
            if (symbolic)
                *symbolic = eta_residue_at_one(product->spec);
            if (numeric)
                *numeric = eta_residue_numeric(product->spec, 1e-6, c);
        }
    });
}

ze_status ze_product_sigma_scan(const ze_product * product, const ze_eval_config * cfg,
                                const double * sigmas, size_t count, ze_scan_row * rows)
{
    return guard([&] {
        require(product, "product");
        if (count == 0)
            return;
        require(sigmas, "sigmas");
        require(rows, "rows");
        EvalConfig const c = to_cfg(cfg);
        for (size_t i = 0; i < count; ++i) {
            double const sigma = sigmas[i];
            if (!(sigma > 1.0))
                throw InvalidArgument("sigma_scan needs sigma > 1");
            Complex const v = product->field
                                  ? eta_kappa_truncated(*product->field, product->spec,
                                                        Complex(sigma, 0.0), c)
                                  : eta_truncated(product->spec, Complex(sigma, 0.0), c);
            rows[i] = {sigma, to_c(v), sigma_tail_bound(product->spec, sigma),
                       product->spec.n_terms()};
        }
    });
}

ze_status ze_point_set_counterexample(int64_t k_lo, int64_t k_hi, ze_point_set ** out)
{
    return guard([&] {
        require(out, "out");
        *out = new ze_point_set{counterexample_zero_set(k_lo, k_hi)};
    });
}

ze_status ze_point_set_from_zeros(const ze_zero_list * zeros, int symmetrize,
                                  ze_point_set ** out)
{
    return guard([&] {
        require(zeros, "zeros");
        require(out, "out");
        *out = new ze_point_set{to_point_set(zeros->list, symmetrize != 0)};
    });
}

size_t ze_point_set_size(const ze_point_set * set)
{
    return set ? set->set.total_multiplicity() : 0;
}

ze_status ze_point_set_disc_count(const ze_point_set * set, double r, size_t * out)
{
    return guard([&] {
        require(set, "set");
        require(out, "out");
        *out = disc_count(set->set, r);
    });
}

ze_status ze_point_set_density(const ze_point_set * set, const double * radii, size_t count,
                               double * slopes)
{
    return guard([&] {
        require(set, "set");
        if (count == 0)
            return;
        require(radii, "radii");
        require(slopes, "slopes");
        auto const pts = density_slope(set->set, std::vector<double>(radii, radii + count));
        for (size_t i = 0; i < count; ++i)
            slopes[i] = pts[i].slope;
    });
}

void ze_point_set_free(ze_point_set * set)
{
    delete set;
}

ze_status ze_fe_check(const char * case_name, size_t samples, uint64_t seed,
                      const ze_zero_list * zeros, size_t n_terms, const ze_eval_config * cfg,
                      ze_report ** out)
{
    return guard([&] {
        require(case_name, "case_name");
        require(out, "out");
        *out = new ze_report{fe_check(case_name, samples, seed, zeros ? &zeros->list : nullptr,
                                      n_terms, to_cfg(cfg))};
    });
}

ze_status ze_uniqueness(const char * case_name, const ze_eval_config * cfg, ze_report ** out)
{
    return guard([&] {
        require(case_name, "case_name");
        require(out, "out");
        *out = new ze_report{uniqueness_case(case_name, to_cfg(cfg))};
    });
}

size_t ze_report_size(const ze_report * report)
{
    return report ? report->report.records.size() : 0;
}

ze_status ze_report_get(const ze_report * report, size_t index, ze_report_record * out)
{
    return guard([&] {
        require(report, "report");
        require(out, "out");
        if (index >= report->report.records.size())
            throw InvalidArgument("report index out of range");
        auto const & r = report->report.records[index];
        *out = {r.case_name.c_str(), r.sample.c_str(), r.lhs, r.rhs, r.residual,
                r.verdict.c_str()};
    });
}

int ze_report_passed(const ze_report * report)
{
    return report && report->report.passed() ? 1 : 0;
}

void ze_report_free(ze_report * report)
{
    delete report;
}

ze_status ze_field_lookup(int64_t discriminant, const char * override_path, ze_field * out)
{
    return guard([&] {
        require(out, "out");
        auto const f = lookup_field(discriminant, override_path ? override_path : "");
        *out = {f.discriminant, f.r1, f.r2, f.class_number, f.regulator, f.roots_of_unity};
    });
}

ze_status ze_kronecker(int64_t discriminant, uint64_t n, int * out)
{
    return guard([&] {
        require(out, "out");
        *out = kronecker_chi(discriminant, n);
    });
}

ze_status ze_ideal_counts(const ze_field * field, size_t limit, uint32_t * out)
{
    return guard([&] {
        require(field, "field");
        require(out, "out");
        auto const series = ideal_counts(to_cpp(*field), limit);
        for (size_t n = 1; n <= limit; ++n)
            out[n - 1] = series.a[n];
    });
}

ze_status ze_dirichlet_l(const ze_eval_config * cfg, int64_t discriminant, ze_complex s,
                         ze_complex * out)
{
    return guard([&] {
        require(out, "out");
        *out = to_c(dirichlet_L(discriminant, to_cpp(s), to_cfg(cfg)));
    });
}

ze_status ze_zeta_kappa(const ze_field * field, const ze_eval_config * cfg, ze_complex s,
                        ze_complex * out)
{
    return guard([&] {
        require(field, "field");
        require(out, "out");
        *out = to_c(zeta_kappa(to_cpp(*field), to_cpp(s), to_cfg(cfg)));
    });
}

ze_status ze_residue_check(const ze_field * field, const ze_eval_config * cfg, double * numeric,
                           double * formula, double * rel_err)
{
    return guard([&] {
        require(field, "field");
        auto const r = residue_check(to_cpp(*field), to_cfg(cfg));
        if (numeric)
            *numeric = r.numeric;
        if (formula)
            *formula = r.formula;
        if (rel_err)
            *rel_err = r.rel_err;
    });
}

ze_status ze_l_zeros(int64_t discriminant, double t_max, const ze_eval_config * cfg,
                     ze_zero_list ** out)
{
    return guard([&] {
        require(out, "out");
        *out = new ze_zero_list{find_L_zeros(discriminant, t_max, to_cfg(cfg))};
    });
}

ze_status ze_kappa_zeros(const ze_field * field, double t_max, const ze_eval_config * cfg,
                         ze_zero_list ** out)
{
    return guard([&] {
        require(field, "field");
        require(out, "out");
        *out = new ze_zero_list{kappa_zeros(to_cpp(*field), t_max, to_cfg(cfg))};
    });
}

ze_status ze_kappa_first_zeros(const ze_field * field, size_t count, const ze_eval_config * cfg,
                               ze_zero_list ** out)
{
    return guard([&] {
        require(field, "field");
        require(out, "out");
        *out = new ze_zero_list{kappa_first_zeros(to_cpp(*field), count, to_cfg(cfg))};
    });
}

} // extern "C"
