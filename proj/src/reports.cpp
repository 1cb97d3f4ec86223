#include "zetaeta/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "zetaeta/dedekind.hpp"
#include "zetaeta/eta_builder.hpp"
#include "zetaeta/special_functions.hpp"
#include "zetaeta/uniqueness.hpp"

namespace zetaeta {

namespace {

std::string format_point(Complex s)
{
    return format_number(s.real()) + "," + format_number(s.imag());
}

ReportRecord threshold_record(std::string name, std::string sample, double lhs, double rhs,
                              double residual, double bound)
{
    return {std::move(name), std::move(sample), lhs, rhs, residual,
            residual < bound ? "pass" : "fail"};
}

ReportRecord residual_record(std::string name, Complex s, Complex lhs, Complex rhs,
                             double bound)
{
    double const residual = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
    return threshold_record(std::move(name), format_point(s), std::abs(lhs), std::abs(rhs),
                            residual, bound);
}

void add_fe_residuals(Report & report, std::string const & name,
                      FunctionalEquationDescriptor const & desc,
                      MeromorphicTestFunction const & f, std::size_t count, std::uint64_t seed,
                      double bound)
{
    for (Complex s : fe_samples(count, seed)) {
        double const r = fe_residual(desc, f, s);
        report.records.push_back(threshold_record(name, format_point(s), 0.0, 0.0, r, bound));
    }
}

constexpr std::uint64_t kUniquenessSeed = 20240501;

Report sharpness_case()
{
    Report report;
    MeromorphicTestFunction L;
    L.evaluator = counterexample_L;
    L.description = "L(s) = 1 + 2 4^{-s}";
    add_fe_residuals(report, "fe-L", counterexample_descriptor(), L, 20, kUniquenessSeed, 1e-10);
    add_fe_residuals(report, "fe-f1", counterexample_descriptor(), remark_f1(), 20,
                     kUniquenessSeed, 1e-10);

    PointSet const zeros = counterexample_zero_set(-2000, 1999);
    for (double r : {100.0, 200.0, 400.0}) {
        double const slope = static_cast<double>(disc_count(zeros, r)) / r;
        double const rel = std::fabs(slope / kLog4OverPi - 1.0);
        report.records.push_back(threshold_record("density", "r=" + format_number(r), slope,
                                                  kLog4OverPi, rel, 0.02));
    }

    auto const f1 = remark_f1();
    double worst = 0.0;
    for (auto const & p : f1_zero_set(-50, 49).points)
        worst = std::max(worst, std::abs(f1(p.value)));
    report.records.push_back(threshold_record("zeros-of-f1", "k=-50..49", worst, 0.0, worst, 1e-10));

    Complex const two(2.0, 0.0);
    double const gap = std::abs(f1(two) - counterexample_L(two));
    report.records.push_back(threshold_record("witness-f1", "2,0", gap, 0.5625,
                                              std::fabs(gap - 0.5625), 1e-12));

    auto const scan = scan_F_exponents(counterexample_series(), f1, PointSet{});
    FProbe const probe = probe_F(scan.F);
    report.records.push_back({"aux-F", "m=" + std::to_string(scan.m) + ",n=" + std::to_string(scan.n),
                              probe.value_at_zero, 0.0, probe.value_at_zero,
                              probe.ok ? "pass" : "fail"});

    PointSet const unscaled = counterexample_zero_set(-50, 49);
    std::vector<Complex> samples;
    for (int i = 0; i <= 27; ++i)
        samples.push_back(std::polar(30.0 + 10.0 * i, 0.3 * i));
    try {
        product_growth_check(unscaled, samples, 0.9);
        report.records.push_back({"density-precondition", "unscaled", 0, 0, 0, "fail"});
    } catch (DensityError const &) {
        report.records.push_back({"density-precondition", "unscaled", 0, 0, 0, "pass"});
    }
    return report;
}

Report order2_case()
{
    Report report;
    auto const f2 = remark_f2();
    add_fe_residuals(report, "fe-f2", counterexample_descriptor(), f2, 20, kUniquenessSeed, 1e-10);

    double prev = 0.0;
    for (double t : {10.0, 20.0, 40.0}) {
        double const g = log_reciprocal_gap(f2, {0.5, t});
        report.records.push_back({"log-gap", "0.5," + format_number(t), g, t * t, 0.0, "info"});
        if (prev != 0.0) {
            double const ratio = g / prev;
            // quadratic growth doubles t and quadruples the probe
            bool const ok = ratio >= 2.0 && ratio <= 8.0;
            report.records.push_back({"growth-ratio", "t=" + format_number(t), ratio, 4.0,
                                      std::fabs(ratio / 4.0 - 1.0), ok ? "pass" : "fail"});
        }
        prev = g;
    }
    Complex const w(0.5, 3.0);
    double const gap = std::abs(f2(w) - counterexample_L(w));
    report.records.push_back({"witness-f2", format_point(w), gap, 0.4, 0.0,
                              gap > 0.4 ? "pass" : "fail"});
    return report;
}

Report limit0_case()
{
    Report report;
    auto const f3 = remark_f3();
    add_fe_residuals(report, "fe-f3", counterexample_descriptor(), f3, 20, kUniquenessSeed, 1e-10);
    double const v30 = std::abs(f3(Complex(30.0, 0.0)));
    report.records.push_back({"abs-f3", "30,0", v30, 1e-3, 0.0, v30 < 1e-3 ? "pass" : "fail"});
    for (double sigma : {40.0, 100.0, 1000.0}) {
        double const v = std::abs(f3(Complex(sigma, 0.0)));
        report.records.push_back({"abs-f3", format_number(sigma) + ",0", v,
                                  1.0 / (sigma * sigma), 0.0, "info"});
    }
    Complex const two(2.0, 0.0);
    double const gap = std::abs(f3(two) - counterexample_L(two));
    report.records.push_back({"witness-f3", "2,0", gap, 0.4, 0.0, gap > 0.4 ? "pass" : "fail"});
    return report;
}

} // namespace

bool Report::passed() const
{
    return first_failure() == nullptr;
}

ReportRecord const * Report::first_failure() const
{
    for (auto const & r : records)
        if (r.verdict == "fail")
            return &r;
    return nullptr;
}

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<Complex> fe_samples(std::size_t count, std::uint64_t seed)
{
    SampleRng rng(seed);
    std::vector<Complex> out;
    out.reserve(count);
    while (out.size() < count) {
        double const re = rng.uniform(-5.0, 6.0);
        double const im = rng.uniform(-30.0, 30.0);
        if (std::fabs(im) < 0.05 && std::fabs(re - std::round(re)) < 0.05)
            continue;
        out.emplace_back(re, im);
    }
    return out;
}

std::vector<std::string> fe_check_cases()
{
    return {"zeta", "eta", "xi", "counterexample", "dedekind"};
}

std::vector<std::string> uniqueness_cases()
{
    return {"sharpness", "order2", "limit0"};
}

Report fe_check(std::string const & case_name, std::size_t samples, std::uint64_t seed,
                ZeroList const * zeros, std::size_t n_terms, EvalConfig const & cfg)
{
    if (samples == 0)
        throw InvalidArgument("fe_check needs at least one sample");
    auto const points = fe_samples(samples, seed);
    Report report;

    if (case_name == "zeta") {
        for (Complex s : points)
            report.records.push_back(residual_record(
                "zeta-reflection", s, complex_zeta(1.0 - s, cfg),
                riemann_fe_factor(s) * complex_zeta(s, cfg), 1e-9));
    } else if (case_name == "xi") {
        for (Complex s : points)
            report.records.push_back(residual_record("xi-symmetry", s, xi(s, cfg),
                                                     xi(1.0 - s, cfg), 1e-9));
    } else if (case_name == "eta") {
        if (zeros == nullptr || zeros->size() == 0)
            throw InvalidArgument("the eta suite needs a zero list");
        TruncatedProductSpec const spec(*zeros, n_terms ? n_terms : zeros->size(), 0.5, {}, cfg);
        for (Complex s : points)
            report.records.push_back(residual_record(
                "eta-fe", s, eta_truncated(spec, 1.0 - s, cfg),
                riemann_fe_factor(s) * eta_truncated(spec, s, cfg), 1e-9));
    } else if (case_name == "counterexample") {
        auto const desc = counterexample_descriptor();
        auto const series = counterexample_series();
        for (Complex s : points) {
            double const r = fe_residual(desc, series, s);
            report.records.push_back(threshold_record("counterexample-fe", format_point(s),
                                                      0.0, 0.0, r, 1e-10));
        }
    } else if (case_name == "dedekind") {
        auto const field = lookup_field(-4);
        TruncatedProductSpec const spec =
            kappa_product_spec(field, kappa_first_zeros(field, 100, cfg), 100, cfg);
        for (Complex s : points) {
            report.records.push_back(residual_record("xi-kappa-symmetry", s,
                                                     xi_kappa(field, s, cfg),
                                                     xi_kappa(field, 1.0 - s, cfg), 1e-9));
            report.records.push_back(residual_record(
                "eta-kappa-fe", s, eta_kappa_truncated(field, spec, 1.0 - s, cfg),
                kappa_fe_factor(field, s) * eta_kappa_truncated(field, spec, s, cfg), 1e-9));
        }
    } else {
        throw InvalidArgument("unknown fe-check case '" + case_name + "'");
    }
    return report;
}

Report uniqueness_case(std::string const & case_name, EvalConfig const & cfg)
{
    cfg.validate();
    if (case_name == "sharpness")
        return sharpness_case();
    if (case_name == "order2")
        return order2_case();
    if (case_name == "limit0")
        return limit0_case();
    throw InvalidArgument("unknown uniqueness case '" + case_name + "'");
}

std::string default_zero_cache_path()
{
    std::string dir;
    if (char const * env = std::getenv("ZETA_CACHE_DIR"); env && *env)
        dir = env;
    else if (char const * xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        dir = std::string(xdg) + "/zetaeta";
    else if (char const * home = std::getenv("HOME"); home && *home)
        dir = std::string(home) + "/.cache/zetaeta";
    else
        dir = ".zetaeta-cache";
    return dir + "/zeta-zeros.txt";
}

} // namespace zetaeta
