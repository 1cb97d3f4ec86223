#include "zetaeta/dedekind.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "zetaeta/special_functions.hpp"

namespace zetaeta {

namespace {

constexpr double kLogPi = 1.14472988584940017414;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLog2Pi = 1.83787706640934548356;
constexpr double kDirectRadius = 50.0;

bool squarefree(std::int64_t m)
{
    m = m < 0 ? -m : m;
    for (std::int64_t p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0)
            return false;
    return m != 0;
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t const r = a % m;
    return r < 0 ? r + m : r;
}

/// Jacobi symbol (a | n) for odd n > 0 and 0 <= a < n.
int jacobi(std::uint64_t a, std::uint64_t n)
{
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::uint64_t const r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

double abs_disc(QuadraticFieldData const & field)
{
    return std::fabs(static_cast<double>(field.discriminant));
}

/// Parity a of chi_D: 1 for odd characters (D < 0), 0 for even ones.
int character_parity(std::int64_t D)
{
    return D < 0 ? 1 : 0;
}

void require_fundamental(std::int64_t D)
{
    if (!is_fundamental_discriminant(D))
        throw InvalidArgument("D = " + std::to_string(D) + " is not a fundamental discriminant");
}

/// log of (s/2) |D|^{s/2} Gamma_R(s)^{r1} Gamma_C(s)^{r2} in its pole-free form.
Complex log_prefactor(QuadraticFieldData const & field, Complex s)
{
    Complex const base = (s / 2.0) * std::log(abs_disc(field));
    if (field.imaginary())
        return base - s * kLog2Pi + detail::log_gamma_any(s + 1.0);
    return base - s * kLogPi + detail::log_gamma_any(1.0 + s / 2.0)
           + detail::log_gamma_any(s / 2.0);
}

/// Points where the prefactor's Gamma functions have poles (zeros of eta_K).
bool at_prefactor_pole(QuadraticFieldData const & field, Complex s, double tol)
{
    if (std::abs(s.imag()) > tol)
        return false;
    double const x = s.real();
    if (field.imaginary()) {
        double const k = std::round(x);
        return k <= -1.0 && std::abs(x - k) <= tol;
    }
    double const k = std::round(x / 2.0);
    return k <= 0.0 && std::abs(x - 2.0 * k) <= tol;
}

} // namespace

bool is_fundamental_discriminant(std::int64_t D)
{
    if (D == 0 || D == 1)
        return false;
    if (mod(D, 4) == 1)
        return squarefree(D);
    if (mod(D, 4) == 0) {
        std::int64_t const m = D / 4;
        std::int64_t const r = mod(m, 4);
        return (r == 2 || r == 3) && squarefree(m);
    }
    return false;
}

void QuadraticFieldData::validate() const
{
    require_fundamental(discriminant);
    if (class_number < 1)
        throw InvalidArgument("class number must be positive");
    if (!(regulator > 0.0))
        throw InvalidArgument("regulator must be positive");
    if (discriminant < 0) {
        if (r1 != 0 || r2 != 1)
            throw InvalidArgument("an imaginary quadratic field has r1 = 0, r2 = 1");
        if (regulator != 1.0)
            throw InvalidArgument("an imaginary quadratic field has regulator 1");
        int const w = discriminant == -4 ? 4 : discriminant == -3 ? 6 : 2;
        if (roots_of_unity != w)
            throw InvalidArgument("Q(sqrt " + std::to_string(discriminant) + ") has "
                                  + std::to_string(w) + " roots of unity");
    } else {
        if (r1 != 2 || r2 != 0)
            throw InvalidArgument("a real quadratic field has r1 = 2, r2 = 0");
        if (roots_of_unity != 2)
            throw InvalidArgument("a real quadratic field has 2 roots of unity");
    }
}

std::vector<QuadraticFieldData> builtin_field_table()
{
    return {
        {-4, 0, 1, 1, 1.0, 4},
        {-3, 0, 1, 1, 1.0, 6},
        {5, 2, 0, 1, 0.48121182505960344750, 2}, // log((1 + sqrt 5)/2)
        {8, 2, 0, 1, 0.88137358701954302523, 2}, // log(1 + sqrt 2)
    };
}

std::vector<QuadraticFieldData> load_field_table(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open field table " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (nlohmann::json::exception const & e) {
        throw FormatError(path + ": " + e.what());
    }
    if (!doc.is_array())
        throw FormatError(path + ": field table must be a JSON array");

    std::vector<QuadraticFieldData> out;
    for (auto const & rec : doc) {
        QuadraticFieldData f;
        try {
            f.discriminant = rec.at("discriminant").get<std::int64_t>();
            f.r1 = rec.at("r1").get<int>();
            f.r2 = rec.at("r2").get<int>();
            f.class_number = rec.at("class_number").get<std::int64_t>();
            f.regulator = rec.at("regulator").get<double>();
            f.roots_of_unity = rec.at("roots_of_unity").get<int>();
        } catch (nlohmann::json::exception const & e) {
            throw FormatError(path + ": " + e.what());
        }
        f.validate();
        out.push_back(f);
    }
    return out;
}

QuadraticFieldData lookup_field(std::int64_t D, std::string const & override_path)
{
    if (!override_path.empty())
        for (auto const & f : load_field_table(override_path))
            if (f.discriminant == D)
                return f;
    for (auto const & f : builtin_field_table())
        if (f.discriminant == D)
            return f;
    throw InvalidArgument("no field data for D = " + std::to_string(D)
                          + " (built-in table covers -4, -3, 5, 8)");
}

int kronecker_chi(std::int64_t D, std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("kronecker_chi needs n >= 1");
    int result = 1;
    while (n % 2 == 0) {
        if (D % 2 == 0)
            return 0;
        std::int64_t const r = mod(D, 8);
        if (r == 3 || r == 5)
            result = -result;
        n /= 2;
    }
    if (n == 1)
        return result;
    auto const a = static_cast<std::uint64_t>(mod(D, static_cast<std::int64_t>(n)));
    return result * jacobi(a, n);
}

IdealCountSeries ideal_counts(QuadraticFieldData const & field, std::uint64_t limit)
{
    field.validate();
    if (limit < 1)
        throw InvalidArgument("ideal_counts needs limit >= 1");
    auto const q = static_cast<std::uint64_t>(std::llabs(field.discriminant));
    std::vector<int> chi(q);
    for (std::uint64_t r = 1; r <= q; ++r)
        chi[r % q] = kronecker_chi(field.discriminant, r);

    std::vector<std::int64_t> acc(limit + 1, 0);
    for (std::uint64_t d = 1; d <= limit; ++d) {
        int const c = chi[d % q];
        if (c == 0)
            continue;
        for (std::uint64_t m = d; m <= limit; m += d)
            acc[m] += c;
    }
    IdealCountSeries series;
    series.limit = limit;
    series.a.assign(limit + 1, 0);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (acc[n] < 0)
            throw ConsistencyError("negative ideal count at n = " + std::to_string(n));
        series.a[n] = static_cast<std::uint32_t>(acc[n]);
    }
    return series;
}

Complex ideal_series_sum(QuadraticFieldData const & field, IdealCountSeries const & series,
                         Complex s, bool tail)
{
    Complex sum(0.0, 0.0);
    for (std::uint64_t n = 1; n <= series.limit; ++n)
        if (series.a[n] != 0)
            sum += static_cast<double>(series.a[n])
                   * std::exp(-s * std::log(static_cast<double>(n)));
    if (tail) {
        double const M = static_cast<double>(series.limit);
        sum += class_number_formula(field) * std::exp((1.0 - s) * std::log(M)) / (s - 1.0);
    }
    return sum;
}

Complex dirichlet_L(std::int64_t D, Complex s, EvalConfig const & cfg)
{
    cfg.validate();
    require_fundamental(D);
    double const q = std::fabs(static_cast<double>(D));

    if (s.real() < 0.0) {
        // Lambda(s) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s) = Lambda(1-s)
        double const a = character_parity(D);
        Complex const log_ratio = (0.5 - s) * std::log(q / kPi)
                                  + detail::log_gamma_any((1.0 - s + a) / 2.0)
                                  - detail::log_gamma_any((s + a) / 2.0);
        if (std::isinf(log_ratio.real()) && log_ratio.real() < 0.0)
            return {0.0, 0.0};
        return std::exp(log_ratio) * dirichlet_L(D, 1.0 - s, cfg);
    }

    // q^{-s} sum_a chi(a) zeta_H(s, a/q); the 1/(s-1) parts cancel since sum chi(a) = 0
    int const cutoff = detail::em_cutoff(s, cfg);
    Complex regular(0.0, 0.0), pole_part(0.0, 0.0);
    auto const qi = static_cast<std::uint64_t>(q);
    for (std::uint64_t a = 1; a < qi; ++a) {
        int const c = kronecker_chi(D, a);
        if (c == 0)
            continue;
        auto const parts = detail::hurwitz_em_parts(s, static_cast<double>(a) / q, cutoff, cfg);
        regular += static_cast<double>(c) * parts.regular;
        pole_part -= static_cast<double>(c) * parts.tail_log
                     * detail::expm1_over_z((1.0 - s) * parts.tail_log);
    }
    return std::exp(-s * std::log(q)) * (regular + pole_part);
}

Complex kappa_fe_factor(QuadraticFieldData const & field, Complex s)
{
    double const n = field.degree();
    Complex const lg = (s - 0.5) * std::log(abs_disc(field))
                       + static_cast<double>(field.r1 + field.r2) * detail::log_cos(kPi * s / 2.0)
                       + static_cast<double>(field.r2) * detail::log_sin(kPi * s / 2.0)
                       + n * (kLog2 - s * kLog2Pi + detail::log_gamma_any(s));
    if (std::isinf(lg.real()) && lg.real() < 0.0)
        return {0.0, 0.0};
    return std::exp(lg);
}

Complex zeta_kappa(QuadraticFieldData const & field, Complex s, EvalConfig const & cfg)
{
    cfg.validate();
    if (std::abs(s - 1.0) <= 1e-8)
        throw PoleError("zeta_K has a pole at s = 1");
    if (s.real() <= 0.0 && std::abs(s) >= 0.25)
        return kappa_fe_factor(field, 1.0 - s) * zeta_kappa(field, 1.0 - s, cfg);
    return complex_zeta(s, cfg) * dirichlet_L(field.discriminant, s, cfg);
}

double class_number_formula(int r1, int r2, double class_number, double regulator,
                            double roots_of_unity, double abs_discriminant)
{
    if (!(roots_of_unity > 0.0 && abs_discriminant > 0.0))
        throw InvalidArgument("class number formula needs w > 0 and |D| > 0");
    return std::pow(2.0, r1) * std::pow(2.0 * kPi, r2) * class_number * regulator
           / (roots_of_unity * std::sqrt(abs_discriminant));
}

double class_number_formula(QuadraticFieldData const & field)
{
    return class_number_formula(field.r1, field.r2, static_cast<double>(field.class_number),
                                field.regulator, field.roots_of_unity, abs_disc(field));
}

ResidueCheck residue_check(QuadraticFieldData const & field, EvalConfig const & cfg)
{
    field.validate();
    constexpr double delta = 1e-5;
    Complex const up = delta * zeta_kappa(field, Complex(1.0 + delta, 0.0), cfg);
    Complex const down = -delta * zeta_kappa(field, Complex(1.0 - delta, 0.0), cfg);
    ResidueCheck r;
    r.numeric = 0.5 * (up + down).real();
    r.formula = class_number_formula(field);
    r.rel_err = std::fabs(r.numeric - r.formula) / r.formula;
    return r;
}

Complex xi_kappa(QuadraticFieldData const & field, Complex s, EvalConfig const & cfg)
{
    // removable singularities: Gamma poles of the prefactor against zeros of zeta_K
    if (at_prefactor_pole(field, s, 1e-6) && s.real() < 0.5)
        return xi_kappa(field, 1.0 - s, cfg);
    Complex residual_part;
    if (std::abs(s - 1.0) < 1e-6)
        residual_part = zeta_times_s_minus_one(s, cfg) * dirichlet_L(field.discriminant, s, cfg);
    else
        residual_part = (s - 1.0) * zeta_kappa(field, s, cfg);
    return std::exp(log_prefactor(field, s)) * residual_part;
}

double kappa_leading_constant(QuadraticFieldData const & field)
{
    return std::pow(2.0, field.r1 + field.r2 - 1) * static_cast<double>(field.class_number)
           * field.regulator / field.roots_of_unity;
}

TruncatedProductSpec kappa_product_spec(QuadraticFieldData const & field, ZeroList zeros,
                                        std::size_t n_terms, EvalConfig const & cfg)
{
    field.validate();
    return TruncatedProductSpec(std::move(zeros), n_terms, kappa_leading_constant(field),
                                kappa_validator(field, cfg), cfg);
}

Complex h_kappa_truncated(QuadraticFieldData const & field, TruncatedProductSpec const & spec,
                          Complex s)
{
    (void)field; // same factors as h; the field enters only through the constant
    return h_truncated(spec, s);
}

Complex eta_kappa_truncated(QuadraticFieldData const & field, TruncatedProductSpec const & spec,
                            Complex s, EvalConfig const & cfg)
{
    cfg.validate();
    if (std::abs(s - 1.0) <= 1e-8)
        throw PoleError("eta_K has a pole at s = 1");
    if (at_prefactor_pole(field, s, 1e-10))
        return {0.0, 0.0};
    Complex const log_den = std::log(s - 1.0) + log_prefactor(field, s);
    if (std::abs(s) > kDirectRadius) {
        Complex const lh = log_h_truncated(spec, s);
        if (std::isinf(lh.real()) && lh.real() < 0.0)
            return {0.0, 0.0};
        return std::exp(lh - log_den);
    }
    return h_kappa_truncated(field, spec, s) * std::exp(-log_den);
}

double eta_kappa_fe_residual(QuadraticFieldData const & field, TruncatedProductSpec const & spec,
                             Complex s, EvalConfig const & cfg)
{
    Complex const lhs = eta_kappa_truncated(field, spec, 1.0 - s, cfg);
    Complex const rhs = kappa_fe_factor(field, s) * eta_kappa_truncated(field, spec, s, cfg);
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

double eta_kappa_residue_symbolic(QuadraticFieldData const & field,
                                  TruncatedProductSpec const & spec)
{
    double const h1 = h_kappa_truncated(field, spec, Complex(1.0, 0.0)).real();
    double const gamma_r1 = (std::exp(-0.5 * kLogPi) * complex_gamma(0.5)).real();
    double const gamma_c1 = (2.0 / (2.0 * kPi) * complex_gamma(1.0)).real();
    double const den = 0.5 * std::sqrt(abs_disc(field)) * std::pow(gamma_r1, field.r1)
                       * std::pow(gamma_c1, field.r2);
    return h1 / den;
}

double eta_kappa_residue_numeric(QuadraticFieldData const & field,
                                 TruncatedProductSpec const & spec, double delta,
                                 EvalConfig const & cfg)
{
    if (!(delta > 1e-8))
        throw InvalidArgument("residue offset must exceed the pole window");
    Complex const up = delta * eta_kappa_truncated(field, spec, Complex(1.0 + delta, 0.0), cfg);
    Complex const down = -delta * eta_kappa_truncated(field, spec, Complex(1.0 - delta, 0.0), cfg);
    return 0.5 * (up + down).real();
}

double theta_chi(std::int64_t D, double t)
{
    require_fundamental(D);
    double const q = std::fabs(static_cast<double>(D));
    double const a = character_parity(D);
    return 0.5 * t * std::log(q / kPi)
           + complex_log_gamma(Complex((0.5 + a) / 2.0, t / 2.0)).imag();
}

Complex rotated_L(std::int64_t D, double t, EvalConfig const & cfg)
{
    return std::polar(1.0, theta_chi(D, t)) * dirichlet_L(D, Complex(0.5, t), cfg);
}

double hardy_Z_chi(std::int64_t D, double t, EvalConfig const & cfg)
{
    if (!(t > 0.0))
        throw DomainError("hardy_Z_chi requires t > 0");
    Complex const z = rotated_L(D, t, cfg);
    if (std::fabs(z.imag()) >= 1e-8 * (1.0 + std::fabs(z.real())))
        throw ConsistencyError("rotated L has a non-negligible imaginary part at t = "
                               + std::to_string(t));
    return z.real();
}

ZeroList find_L_zeros(std::int64_t D, double t_max, EvalConfig const & cfg)
{
    cfg.validate();
    require_fundamental(D);
    if (!(t_max >= 1.0 && t_max <= 2000.0))
        throw InvalidArgument("find_L_zeros requires 1 <= t_max <= 2000");

    double const q = std::fabs(static_cast<double>(D));
    double const density_log = std::log(q * t_max / (2.0 * kPi));
    double step = density_log > 1.0 ? std::min(0.5, 0.25 * 2.0 * kPi / density_log) : 0.5;
    double const expected = std::round(theta_chi(D, t_max) / kPi);

    auto const z = [D, &cfg](double t) { return hardy_Z_chi(D, t, cfg); };
    for (int attempt = 0; attempt <= 3; ++attempt, step /= 2.0) {
        ZeroList list;
        list.ordinates = scan_sign_changes(z, t_max, step);
        list.max_t_searched = t_max;
        list.source_tag = "L D=" + std::to_string(D);
        if (std::fabs(static_cast<double>(list.size()) - expected) <= 1.0)
            return list;
    }
    throw CompletenessError("L(s, chi_" + std::to_string(D) + ") zero count up to t = "
                            + std::to_string(t_max) + " disagrees with theta_chi/pi");
}

ZeroList merge_zero_lists(ZeroList const & a, ZeroList const & b, std::string const & tag)
{
    ZeroList out;
    out.source_tag = tag;
    out.max_t_searched = std::min(a.max_t_searched, b.max_t_searched);
    out.ordinates.reserve(a.size() + b.size());
    std::merge(a.ordinates.begin(), a.ordinates.end(), b.ordinates.begin(), b.ordinates.end(),
               std::back_inserter(out.ordinates));
    for (std::size_t i = 1; i < out.ordinates.size(); ++i)
        if (out.ordinates[i] - out.ordinates[i - 1] < 1e-8)
            throw ConsistencyError("zero lists collide near t = "
                                   + std::to_string(out.ordinates[i]));
    return out;
}

ZeroList kappa_zeros(QuadraticFieldData const & field, double t_max, EvalConfig const & cfg)
{
    field.validate();
    if (!(t_max > 10.0 && t_max <= 2000.0))
        throw InvalidArgument("kappa_zeros requires 10 < t_max <= 2000");
    ZeroList const zeta_part = find_zeros_up_to(t_max, cfg);
    ZeroList const l_part = find_L_zeros(field.discriminant, t_max, cfg);
    return merge_zero_lists(zeta_part, l_part,
                            "dedekind D=" + std::to_string(field.discriminant));
}

ZeroList kappa_first_zeros(QuadraticFieldData const & field, std::size_t count,
                           EvalConfig const & cfg)
{
    if (count == 0)
        throw InvalidArgument("kappa_first_zeros needs count >= 1");
    auto const smooth = [&field](double t) {
        return smooth_zero_count(t) + theta_chi(field.discriminant, t) / kPi;
    };
    double const target = static_cast<double>(count) + 3.0;
    if (smooth(2000.0) < target)
        throw InvalidArgument("requested zero count exceeds the supported height");
    double lo = 10.5, hi = 2000.0;
    if (smooth(lo) >= target)
        hi = lo;
    while (hi - lo > 1e-6) {
        double const mid = 0.5 * (lo + hi);
        (smooth(mid) < target ? lo : hi) = mid;
    }
    double t_max = hi;
    for (int attempt = 0;; ++attempt) {
        try {
            ZeroList list = kappa_zeros(field, std::min(t_max, 2000.0), cfg);
            if (list.size() < count)
                throw CompletenessError("fewer zeta_K zeros than requested");
            return list;
        } catch (CompletenessError const &) {
            if (attempt == 2 || t_max >= 2000.0)
                throw;
            t_max += 1.0;
        }
    }
}

CriticalLineFunction kappa_validator(QuadraticFieldData const & field, EvalConfig const & cfg)
{
    std::int64_t const D = field.discriminant;
    return [D, cfg](double t) {
        return std::min(std::fabs(hardy_Z(t, cfg)), std::fabs(hardy_Z_chi(D, t, cfg)));
    };
}

} // namespace zetaeta
