// Command-line front end. Talks to the library only through zetaeta.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetaeta/zetaeta.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitUsage = 3;

/// A library call failed; carries the status for the exit code.
struct LibraryFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// A check ran but reported a violated invariant.
struct ValidationFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

void check(ze_status st)
{
    if (st != ZE_OK)
        throw LibraryFailure(std::string(ze_status_name(st)) + ": " + ze_last_error_message());
}

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class T, void (*Free)(T *)>
struct Deleter
{
    void operator()(T * p) const { Free(p); }
};

using ZeroListPtr = std::unique_ptr<ze_zero_list, Deleter<ze_zero_list, ze_zero_list_free>>;
using ProductPtr = std::unique_ptr<ze_product, Deleter<ze_product, ze_product_free>>;
using PointSetPtr = std::unique_ptr<ze_point_set, Deleter<ze_point_set, ze_point_set_free>>;
using ReportPtr = std::unique_ptr<ze_report, Deleter<ze_report, ze_report_free>>;

/* Tabular output: one header, then rows of pre-formatted cells. */
class Table
{
    std::vector<std::string> columns_;
    std::vector<std::vector<ordered_json>> rows_;

    public:

    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add(std::vector<ordered_json> row) { rows_.push_back(std::move(row)); }

    void write(std::ostream & os, std::string const & format) const
    {
        if (format == "json") {
            ordered_json arr = ordered_json::array();
            for (auto const & row : rows_) {
                ordered_json obj = ordered_json::object();
                for (std::size_t i = 0; i < columns_.size(); ++i)
                    obj[columns_[i]] = row[i];
                arr.push_back(std::move(obj));
            }
            os << arr.dump(2) << '\n';
            return;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i)
            os << (i ? "," : "") << columns_[i];
        os << '\n';
        for (auto const & row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "");
                if (row[i].is_string())
                    os << csv_escape(row[i].get<std::string>());
                else if (row[i].is_number_float())
                    os << num(row[i].get<double>());
                else
                    os << row[i].dump();
            }
            os << '\n';
        }
    }

    private:

    static std::string csv_escape(std::string const & s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s)
            out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    }
};

ze_complex parse_complex(std::string const & text)
{
    auto const comma = text.find(',');
    std::string const re = text.substr(0, comma);
    std::string const im = comma == std::string::npos ? "0" : text.substr(comma + 1);
    std::size_t used_re = 0, used_im = 0;
    ze_complex z{};
    try {
        z.re = std::stod(re, &used_re);
        z.im = std::stod(im, &used_im);
    } catch (std::exception const &) {
        throw CLI::ValidationError("--s", "expected RE,IM but got '" + text + "'");
    }
    if (used_re != re.size() || used_im != im.size())
        throw CLI::ValidationError("--s", "expected RE,IM but got '" + text + "'");
    return z;
}

ZeroListPtr cached_zeros(std::size_t count)
{
    char path[4096];
    check(ze_default_cache_path(path, sizeof path));
    ze_zero_list * raw = nullptr;
    check(ze_zero_list_cached(path, count, nullptr, &raw));
    return ZeroListPtr(raw);
}

ProductPtr riemann_product(std::size_t nzeros)
{
    ZeroListPtr zeros = cached_zeros(nzeros);
    ze_product * raw = nullptr;
    check(ze_product_new(zeros.get(), nzeros, 0.5, nullptr, &raw));
    return ProductPtr(raw);
}

std::vector<double> sigma_grid(double from, double to, double step)
{
    if (!(from > 1.0) || !(step > 0.0) || !(to >= from))
        throw CLI::ValidationError("sigma grid",
                                   "needs 1 < sigma-from <= sigma-to and step > 0");
    std::vector<double> out;
    auto const n = static_cast<long>(std::floor((to - from) / step + 1e-9));
    if (n > 100000)
        throw CLI::ValidationError("sigma grid", "more than 100000 points");
    for (long k = 0; k <= n; ++k)
        out.push_back(from + static_cast<double>(k) * step);
    return out;
}

Table report_table(ze_report const * report)
{
    Table t({"case", "sample", "lhs", "rhs", "residual", "verdict"});
    for (std::size_t i = 0; i < ze_report_size(report); ++i) {
        ze_report_record r{};
        check(ze_report_get(report, i, &r));
        t.add({r.case_name, r.sample, r.lhs, r.rhs, r.residual, r.verdict});
    }
    return t;
}

void require_report_passed(ze_report const * report)
{
    if (ze_report_passed(report))
        return;
    for (std::size_t i = 0; i < ze_report_size(report); ++i) {
        ze_report_record r{};
        check(ze_report_get(report, i, &r));
        if (std::string(r.verdict) == "fail")
            throw ValidationFailure(std::string(r.case_name) + " at " + r.sample + ": lhs = "
                                    + num(r.lhs) + ", rhs = " + num(r.rhs) + ", residual = "
                                    + num(r.residual));
    }
}

struct Options
{
    std::string format = "csv";
    std::string manifest;

    double tmax = 0.0;
    std::string out;

    std::string fn;
    std::string s_text;
    std::size_t nzeros = 2000;

    double sigma_from = 2.0;
    double sigma_to = 6.0;
    double step = 1.0;

    std::string fe_case;
    std::size_t samples = 50;
    std::uint64_t seed = 1;

    std::string uq_case;
    std::string report;

    std::int64_t disc = -4;
    std::string action;
    double dk_tmax = 30.0;
    std::size_t limit = 100;
    std::size_t dk_nzeros = 100;
    std::string field_table;

    std::string set;
    double rmax = 0.0;
    std::size_t points = 10;
};

using Params = std::map<std::string, std::string>;

void write_manifest(std::string const & path, std::string const & sub, Params const & params,
                    Options const & o)
{
    ordered_json m;
    m["subcommand"] = sub;
    m["parameters"] = ordered_json::object();
    for (auto const & [k, v] : params)
        m["parameters"][k] = v;
    m["seed"] = sub == "fe-check" ? o.seed : 0;
    m["output_format"] = o.format;
    std::ofstream f(path);
    if (!f)
        throw LibraryFailure("cannot write manifest " + path);
    f << m.dump(2) << '\n';
}

Params run_zeros(Options const & o, std::ostream & os)
{
    ze_zero_list * raw = nullptr;
    check(ze_zero_list_find(nullptr, o.tmax, &raw));
    ZeroListPtr zeros(raw);
    if (!o.out.empty())
        check(ze_zero_list_save(zeros.get(), o.out.c_str()));
    Table t({"index", "t"});
    for (std::size_t i = 0; i < ze_zero_list_size(zeros.get()); ++i)
        t.add({i + 1, ze_zero_list_at(zeros.get(), i)});
    t.write(os, o.format);
    return {{"tmax", num(o.tmax)}, {"out", o.out}};
}

Params run_eval(Options const & o, std::ostream & os)
{
    ze_complex const s = parse_complex(o.s_text);
    ze_complex v{};
    std::size_t n_terms = 0;
    if (o.fn == "zeta") {
        check(ze_zeta(nullptr, s, &v));
    } else if (o.fn == "xi") {
        check(ze_xi(nullptr, s, &v));
    } else if (o.fn == "gamma") {
        check(ze_gamma(s, &v));
    } else {
        ProductPtr p = riemann_product(o.nzeros);
        n_terms = ze_product_n_terms(p.get());
        if (o.fn == "eta")
            check(ze_product_eta(p.get(), nullptr, s, &v));
        else
            check(ze_product_h(p.get(), s, &v));
    }
    Table t({"fn", "s_re", "s_im", "re", "im", "n_terms"});
    t.add({o.fn, s.re, s.im, v.re, v.im, n_terms});
    t.write(os, o.format);
    Params p{{"fn", o.fn}, {"s", o.s_text}};
    if (n_terms)
        p["nzeros"] = std::to_string(o.nzeros);
    return p;
}

void write_scan(ze_product const * product, std::vector<double> const & sigmas,
                Options const & o, std::ostream & os)
{
    std::vector<ze_scan_row> rows(sigmas.size());
    check(ze_product_sigma_scan(product, nullptr, sigmas.data(), sigmas.size(), rows.data()));
    Table t({"sigma", "re", "im", "tail_bound", "n_terms"});
    for (auto const & r : rows)
        t.add({r.sigma, r.value.re, r.value.im, r.tail_bound, r.n_terms});
    t.write(os, o.format);
}

Params run_eta_scan(Options const & o, std::ostream & os)
{
    auto const sigmas = sigma_grid(o.sigma_from, o.sigma_to, o.step);
    ProductPtr p = riemann_product(o.nzeros);
    write_scan(p.get(), sigmas, o, os);
    return {{"sigma-from", num(o.sigma_from)}, {"sigma-to", num(o.sigma_to)},
            {"step", num(o.step)}, {"nzeros", std::to_string(o.nzeros)}};
}

Params run_fe_check(Options const & o, std::ostream & os)
{
    ZeroListPtr zeros;
    if (o.fe_case == "eta")
        zeros = cached_zeros(o.nzeros);
    ze_report * raw = nullptr;
    Params params{{"case", o.fe_case}, {"samples", std::to_string(o.samples)},
                  {"seed", std::to_string(o.seed)}};
    if (zeros)
        params["nzeros"] = std::to_string(o.nzeros);
    check(ze_fe_check(o.fe_case.c_str(), o.samples, o.seed, zeros.get(), zeros ? o.nzeros : 0,
                      nullptr, &raw));
    ReportPtr report(raw);
    report_table(report.get()).write(os, o.format);
    require_report_passed(report.get());
    return params;
}

Params run_uniqueness(Options const & o, std::ostream & os)
{
    ze_report * raw = nullptr;
    check(ze_uniqueness(o.uq_case.c_str(), nullptr, &raw));
    ReportPtr report(raw);
    Table t = report_table(report.get());
    t.write(os, o.format);
    if (!o.report.empty()) {
        std::ofstream f(o.report);
        if (!f)
            throw LibraryFailure("cannot write report " + o.report);
        t.write(f, "json");
    }
    require_report_passed(report.get());
    return {{"case", o.uq_case}, {"report", o.report}};
}

Params run_dedekind(Options const & o, std::ostream & os)
{
    ze_field field{};
    check(ze_field_lookup(o.disc, o.field_table.empty() ? nullptr : o.field_table.c_str(), &field));
    Params params{{"disc", std::to_string(o.disc)}, {"action", o.action}};
    if (!o.field_table.empty())
        params["field-table"] = o.field_table;

    if (o.action == "residue") {
        double numeric = 0, formula = 0, rel = 0;
        check(ze_residue_check(&field, nullptr, &numeric, &formula, &rel));
        Table t({"disc", "numeric", "formula", "rel_err"});
        t.add({field.discriminant, numeric, formula, rel});
        t.write(os, o.format);
        if (!(rel < 1e-4))
            throw ValidationFailure("residue mismatch: relative error " + num(rel));
    } else if (o.action == "zeros") {
        ze_zero_list * raw = nullptr;
        check(ze_kappa_zeros(&field, o.dk_tmax, nullptr, &raw));
        ZeroListPtr zeros(raw);
        Table t({"index", "t"});
        for (std::size_t i = 0; i < ze_zero_list_size(zeros.get()); ++i)
            t.add({i + 1, ze_zero_list_at(zeros.get(), i)});
        t.write(os, o.format);
        params["tmax"] = num(o.dk_tmax);
    } else if (o.action == "eta-scan") {
        ze_zero_list * raw = nullptr;
        check(ze_kappa_first_zeros(&field, o.dk_nzeros, nullptr, &raw));
        ZeroListPtr zeros(raw);
        ze_product * praw = nullptr;
        check(ze_product_new_kappa(&field, zeros.get(), o.dk_nzeros, nullptr, &praw));
        ProductPtr p(praw);
        write_scan(p.get(), sigma_grid(o.sigma_from, o.sigma_to, o.step), o, os);
        params["nzeros"] = std::to_string(o.dk_nzeros);
        params["sigma-from"] = num(o.sigma_from);
        params["sigma-to"] = num(o.sigma_to);
        params["step"] = num(o.step);
    } else {
        std::vector<std::uint32_t> a(o.limit);
        check(ze_ideal_counts(&field, o.limit, a.data()));
        Table t({"n", "a"});
        for (std::size_t n = 1; n <= o.limit; ++n)
            t.add({n, a[n - 1]});
        t.write(os, o.format);
        params["limit"] = std::to_string(o.limit);
    }
    return params;
}

Params run_density(Options const & o, std::ostream & os)
{
    if (!(o.rmax > 0.0) || o.points == 0)
        throw CLI::ValidationError("density", "needs --rmax > 0 and --points >= 1");
    PointSetPtr set;
    ze_point_set * raw = nullptr;
    if (o.set == "counterexample") {
        // |s_k| >= (2k+1) pi / log 4, so this range covers the disc
        auto const k = static_cast<std::int64_t>(std::ceil(o.rmax * std::log(4.0) / (2.0 * M_PI))) + 1;
        check(ze_point_set_counterexample(-k - 1, k, &raw));
    } else {
        ze_zero_list * zraw = nullptr;
        check(ze_zero_list_find(nullptr, std::max(o.rmax, 11.0), &zraw));
        ZeroListPtr zeros(zraw);
        check(ze_point_set_from_zeros(zeros.get(), 0, &raw));
    }
    set.reset(raw);

    std::vector<double> radii;
    for (std::size_t i = 1; i <= o.points; ++i)
        radii.push_back(o.rmax * static_cast<double>(i) / static_cast<double>(o.points));
    std::vector<double> slopes(radii.size());
    check(ze_point_set_density(set.get(), radii.data(), radii.size(), slopes.data()));

    double const bound = std::log(4.0) / M_PI;
    Table t({"r", "count", "slope", "ratio_to_log4_over_pi"});
    for (std::size_t i = 0; i < radii.size(); ++i) {
        std::size_t count = 0;
        check(ze_point_set_disc_count(set.get(), radii[i], &count));
        t.add({radii[i], count, slopes[i], slopes[i] / bound});
    }
    t.write(os, o.format);
    return {{"set", o.set}, {"rmax", num(o.rmax)}, {"points", std::to_string(o.points)}};
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Numerical experiments on zeta, the symmetric zero product h, eta, "
                 "the uniqueness theorem and Dedekind zeta functions"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--manifest", o.manifest, "write the run manifest (JSON) to FILE");

    auto * zeros = app.add_subcommand("zeros", "critical-line zeros of zeta up to a height");
    zeros->add_option("--tmax", o.tmax, "search height (10 < T <= 12000)")->required()
        ->check(CLI::Range(std::nextafter(10.0, 11.0), 12000.0));
    zeros->add_option("--out", o.out, "also write the zeros cache file");

    auto * eval = app.add_subcommand("eval", "evaluate one function at one point");
    eval->add_option("--fn", o.fn)->required()->check(CLI::IsMember({"zeta", "xi", "gamma", "eta", "h"}));
    eval->add_option("--s", o.s_text, "point as RE,IM")->required();
    eval->add_option("--nzeros", o.nzeros, "zeros in the product (eta, h)")->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto * scan = app.add_subcommand("eta-scan", "eta_N(sigma) along the real axis");
    scan->add_option("--sigma-from", o.sigma_from)->required();
    scan->add_option("--sigma-to", o.sigma_to)->required();
    scan->add_option("--step", o.step)->required();
    scan->add_option("--nzeros", o.nzeros)->capture_default_str()->check(CLI::PositiveNumber);

    auto * fe = app.add_subcommand("fe-check", "seeded functional-equation residual suite");
    fe->add_option("--case", o.fe_case)->required()
        ->check(CLI::IsMember({"zeta", "eta", "xi", "counterexample", "dedekind"}));
    fe->add_option("--samples", o.samples)->capture_default_str()->check(CLI::PositiveNumber);
    fe->add_option("--seed", o.seed)->capture_default_str();
    fe->add_option("--nzeros", o.nzeros, "zeros in the product (eta case)")->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto * uq = app.add_subcommand("uniqueness", "uniqueness-theorem counterexample cases");
    uq->add_option("--case", o.uq_case)->required()
        ->check(CLI::IsMember({"sharpness", "order2", "limit0"}));
    uq->add_option("--report", o.report, "also write the JSON records to FILE");

    auto * dk = app.add_subcommand("dedekind", "quadratic-field Dedekind zeta experiments");
    dk->add_option("--disc", o.disc, "fundamental discriminant")->required();
    dk->add_option("--action", o.action)->required()
        ->check(CLI::IsMember({"residue", "zeros", "eta-scan", "coeffs"}));
    dk->add_option("--tmax", o.dk_tmax, "zeros: search height (10 < T <= 2000)")
        ->capture_default_str()
        ->check(CLI::Range(std::nextafter(10.0, 11.0), 2000.0));
    dk->add_option("--limit", o.limit, "coeffs: largest n")->capture_default_str()
        ->check(CLI::PositiveNumber);
    dk->add_option("--nzeros", o.dk_nzeros, "eta-scan: zeros in the product")->capture_default_str()
        ->check(CLI::PositiveNumber);
    dk->add_option("--sigma-from", o.sigma_from)->capture_default_str();
    dk->add_option("--sigma-to", o.sigma_to)->capture_default_str();
    dk->add_option("--step", o.step)->capture_default_str();
    dk->add_option("--field-table", o.field_table, "JSON field table overriding the built-in one");

    auto * dens = app.add_subcommand("density", "empirical n(r)/r curves");
    dens->add_option("--set", o.set)->required()->check(CLI::IsMember({"counterexample", "zeta"}));
    dens->add_option("--rmax", o.rmax)->required();
    dens->add_option("--points", o.points, "number of radii")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    std::ostringstream buffer;
    Params params;
    std::string sub;
    try {
        if (*zeros) {
            sub = "zeros";
            params = run_zeros(o, buffer);
        } else if (*eval) {
            sub = "eval";
            params = run_eval(o, buffer);
        } else if (*scan) {
            sub = "eta-scan";
            params = run_eta_scan(o, buffer);
        } else if (*fe) {
            sub = "fe-check";
            params = run_fe_check(o, buffer);
        } else if (*uq) {
            sub = "uniqueness";
            params = run_uniqueness(o, buffer);
        } else if (*dk) {
            sub = "dedekind";
            params = run_dedekind(o, buffer);
        } else {
            sub = "density";
            params = run_density(o, buffer);
        }
    } catch (CLI::ValidationError const & e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (ValidationFailure const & e) {
        std::cout << buffer.str();
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitValidation;
    } catch (LibraryFailure const & e) {
        std::cout << buffer.str();
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitValidation;
    }
    std::cout << buffer.str();
    if (!o.manifest.empty()) {
        try {
            write_manifest(o.manifest, sub, params, o);
        } catch (LibraryFailure const & e) {
            std::cerr << e.what() << '\n';
            return kExitValidation;
        }
    }
    return 0;
}
