#include "zetaeta/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetaeta/special_functions.hpp"

namespace zetaeta {

namespace {

constexpr double kLog4 = 1.38629436111989061883;
constexpr double kLogPi = 1.14472988584940017414;

Complex reflect(Complex s)
{
    return {1.0 - s.real(), s.imag()}; // 1 - conj(s)
}

Complex quadratic_weight(Complex s)
{
    double const a = s.real();
    double const b = s.imag();
    return {a * (1.0 - a) + b * b, b * (1.0 - 2.0 * a)}; // s(1-s)
}

void check_poles(std::vector<Complex> const & poles, Complex s)
{
    for (Complex p : poles)
        if (std::abs(s - p) <= 1e-8)
            throw PoleError("test function has a pole near the sample point");
}

double residual_from(FunctionalEquationDescriptor const & desc,
                     ComplexFunction const & f, Complex s)
{
    if (desc.at_gamma_pole(s, 1e-8) || desc.at_gamma_pole(reflect(s), 1e-8))
        throw PoleError("sample point is at a Gamma-factor pole");
    Complex const lam = f(s) * desc.gamma_part(s);
    Complex const lam_reflected = f(reflect(s)) * desc.gamma_part(reflect(s));
    return std::abs(lam - desc.root_number() * std::conj(lam_reflected))
           / (1.0 + std::abs(lam));
}

} // namespace

FunctionalEquationDescriptor::FunctionalEquationDescriptor(double q_scale,
                                                           std::vector<GammaFactor> gamma_factors,
                                                           Complex root_number)
    : q_scale_(q_scale), gamma_factors_(std::move(gamma_factors)), root_number_(root_number)
{
    if (!(q_scale_ > 0.0))
        throw InvalidArgument("Q must be positive");
    if (std::abs(std::abs(root_number_) - 1.0) > 1e-12)
        throw InvalidArgument("root number must have modulus 1");
    for (auto const & g : gamma_factors_) {
        if (!(g.lambda > 0.0))
            throw InvalidArgument("Gamma factor lambda must be positive");
        if (g.mu.real() < 0.0)
            throw InvalidArgument("Gamma factor mu must have Re(mu) >= 0");
    }
}

bool FunctionalEquationDescriptor::at_gamma_pole(Complex s, double tol) const
{
    for (auto const & g : gamma_factors_) {
        Complex const z = g.lambda * s + g.mu;
        double const k = std::round(z.real());
        if (k <= 0.0 && std::abs(z - k) <= tol)
            return true;
    }
    return false;
}

Complex FunctionalEquationDescriptor::gamma_part(Complex s) const
{
    if (at_gamma_pole(s, 1e-8))
        throw PoleError("Gamma factor has a pole at the requested point");
    Complex lg = s * std::log(q_scale_);
    for (auto const & g : gamma_factors_)
        lg += detail::log_gamma_any(g.lambda * s + g.mu);
    return std::exp(lg);
}

DirichletSeries::DirichletSeries(std::map<std::uint64_t, Complex> coefficients,
                                 std::optional<std::uint64_t> truncation)
    : coefficients_(std::move(coefficients)), truncation_(truncation)
{
    auto const one = coefficients_.find(1);
    if (one == coefficients_.end() || one->second != Complex(1.0, 0.0))
        throw InvalidArgument("a Dirichlet series needs a(1) = 1");
    if (coefficients_.count(0))
        throw InvalidArgument("Dirichlet coefficients are indexed from 1");
    if (truncation_ && *truncation_ == 0)
        throw InvalidArgument("truncation must be positive");
}

Complex DirichletSeries::operator()(Complex s) const
{
    Complex sum(0.0, 0.0);
    for (auto const & [n, a] : coefficients_) {
        if (truncation_ && n > *truncation_)
            break;
        sum += a * std::exp(-s * std::log(static_cast<double>(n)));
    }
    return sum;
}

double MeromorphicTestFunction::log_abs_at(Complex s) const
{
    if (log_abs)
        return log_abs(s);
    return std::log(std::abs(evaluator(s)));
}

double fe_residual(FunctionalEquationDescriptor const & desc,
                   MeromorphicTestFunction const & f, Complex s)
{
    check_poles(f.poles, s);
    check_poles(f.poles, reflect(s));
    return residual_from(desc, f.evaluator, s);
}

double fe_residual(FunctionalEquationDescriptor const & desc,
                   DirichletSeries const & series, Complex s)
{
    return residual_from(desc, [&series](Complex z) { return series(z); }, s);
}

DirichletSeries counterexample_series()
{
    return DirichletSeries({{1, 1.0}, {4, 2.0}});
}

FunctionalEquationDescriptor counterexample_descriptor()
{
    return FunctionalEquationDescriptor(2.0, {});
}

Complex counterexample_L(Complex s)
{
    return 1.0 + 2.0 * std::exp(-s * kLog4);
}

FunctionalEquationDescriptor zeta_descriptor()
{
    return FunctionalEquationDescriptor(std::exp(-0.5 * kLogPi), {{0.5, 0.0}});
}

MeromorphicTestFunction zeta_test_function(EvalConfig const & cfg)
{
    MeromorphicTestFunction f;
    f.evaluator = [cfg](Complex s) { return complex_zeta(s, cfg); };
    f.description = "Riemann zeta";
    f.claimed_order = 1.0;
    f.poles = {Complex(1.0, 0.0)};
    return f;
}

PointSet counterexample_zero_set(std::int64_t k_lo, std::int64_t k_hi)
{
    if (k_hi < k_lo)
        throw InvalidArgument("empty k range");
    PointSet set;
    set.points.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (std::int64_t k = k_lo; k <= k_hi; ++k)
        set.add({0.5, static_cast<double>(2 * k + 1) * kPi / kLog4});
    return set;
}

MeromorphicTestFunction remark_f1()
{
    MeromorphicTestFunction f;
    f.evaluator = [](Complex s) {
        return (1.0 + 1.0 / quadratic_weight(s)) * counterexample_L(s);
    };
    f.description = "f1 = (1 + 1/(s(1-s))) L(s)";
    f.claimed_order = 1.0;
    f.poles = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
    return f;
}

MeromorphicTestFunction remark_f2()
{
    MeromorphicTestFunction f;
    f.evaluator = [](Complex s) {
        Complex const w = quadratic_weight(s);
        Complex const L = counterexample_L(s);
        if (w.real() > 700.0) {
            Complex const e = std::exp(-w);
            return L * e / (1.0 + e);
        }
        return L / (1.0 + std::exp(w));
    };
    f.log_abs = [](Complex s) {
        Complex const w = quadratic_weight(s);
        double const log_l = std::log(std::abs(counterexample_L(s)));
        if (w.real() > 700.0)
            return log_l - w.real() - std::log(std::abs(1.0 + std::exp(-w)));
        return log_l - std::log(std::abs(1.0 + std::exp(w)));
    };
    f.description = "f2 = L(s) / (1 + exp(s(1-s)))";
    f.claimed_order = 2.0;
    return f;
}

MeromorphicTestFunction remark_f3()
{
    MeromorphicTestFunction f;
    f.evaluator = [](Complex s) { return counterexample_L(s) / quadratic_weight(s); };
    f.description = "f3 = L(s) / (s(1-s))";
    f.claimed_order = 1.0;
    f.poles = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
    return f;
}

PointSet f1_zero_set(std::int64_t k_lo, std::int64_t k_hi)
{
    PointSet set = counterexample_zero_set(k_lo, k_hi);
    double const r5 = std::sqrt(5.0);
    set.add({(1.0 + r5) / 2.0, 0.0});
    set.add({(1.0 - r5) / 2.0, 0.0});
    return set;
}

FProbe probe_F(ComplexFunction const & F)
{
    auto const finite_at = [&F](double x) {
        double worst = 0.0;
        for (double side : {1.0, -1.0}) {
            double const far = std::abs(F(Complex(x + side * 1e-5, 0.0)));
            double const near = std::abs(F(Complex(x + side * 1e-6, 0.0)));
            if (!std::isfinite(far) || !std::isfinite(near))
                return false;
            if (far > 0.0)
                worst = std::max(worst, near / far);
            else if (near > 0.0)
                return false;
        }
        return worst <= 3.0;
    };
    FProbe p{};
    p.finite_at_plus_one = finite_at(1.0);
    p.finite_at_minus_one = finite_at(-1.0);
    constexpr double delta = 1e-6;
    Complex const f1 = F(Complex(delta, 0.0));
    Complex const f2 = F(Complex(2.0 * delta, 0.0));
    p.value_at_zero = std::abs(2.0 * f1 - f2);
    if (!std::isfinite(p.value_at_zero))
        p.value_at_zero = std::numeric_limits<double>::infinity();
    p.ok = p.finite_at_plus_one && p.finite_at_minus_one && p.value_at_zero < 1e-10;
    return p;
}

ComplexFunction build_F(DirichletSeries const & L, MeromorphicTestFunction const & f,
                        PointSet const & G, int m, int n)
{
    if (std::abs(m) > 8 || std::abs(n) > 8)
        throw InvalidArgument("exponents m, n must satisfy |m|, |n| <= 8");
    for (auto const & p : G.points)
        if (p.value == Complex(0.0, 0.0))
            throw InvalidArgument("the set G must not contain 0");

    ComplexFunction F = [L, f, G, m, n](Complex s) {
        auto const ratio = [&](Complex z) {
            Complex const fz = f(z);
            return (L(z) - fz) / fz;
        };
        Complex value = std::pow(s * s - 1.0, m) * std::pow(s, n) * ratio(s) * ratio(-s);
        for (auto const & p : G.points)
            value *= std::pow(1.0 - s * s / (p.value * p.value), p.multiplicity);
        return value;
    };
    FProbe const probe = probe_F(F);
    if (!probe.finite_at_plus_one || !probe.finite_at_minus_one)
        throw ConfigError("F has a pole at s = +-1 for m = " + std::to_string(m)
                          + ", n = " + std::to_string(n));
    if (!probe.ok)
        throw ConfigError("F(0) != 0 for m = " + std::to_string(m) + ", n = "
                          + std::to_string(n));
    return F;
}

FExponents scan_F_exponents(DirichletSeries const & L, MeromorphicTestFunction const & f,
                            PointSet const & G)
{
    for (int total = 0; total <= 16; ++total) {
        for (int m = -8; m <= 8; ++m) {
            int const rest = total - std::abs(m);
            if (rest < 0 || rest > 8)
                continue;
            for (int n : {-rest, rest}) {
                try {
                    return {m, n, build_F(L, f, G, m, n)};
                } catch (ConfigError const &) {
                }
                if (rest == 0)
                    break;
            }
        }
    }
    throw ConfigError("no exponents |m|, |n| <= 8 make F regular at +-1 with F(0) = 0");
}

bool GrowthReport::all_ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](GrowthRow const & r) { return r.ok; });
}

GrowthReport product_growth_check(PointSet const & G, std::vector<Complex> const & samples,
                                  double d1)
{
    if (!(d1 > 0.0 && d1 < 1.0))
        throw InvalidArgument("d1 must lie in (0, 1)");

    double const limit = d1 * kLog4OverPi;
    for (Complex s : samples) {
        double const r = std::abs(s);
        if (r <= 0.0)
            continue;
        double const slope = static_cast<double>(disc_count(G, r)) / r;
        if (slope >= limit)
            throw DensityError("n(r, G)/r = " + std::to_string(slope) + " at r = "
                               + std::to_string(r) + " is not below d1 log4/pi = "
                               + std::to_string(limit));
    }

    GrowthReport report;
    report.d2 = 0.5 * (1.0 + d1);
    report.rows.reserve(samples.size());
    for (Complex s : samples) {
        double lhs = 0.0;
        for (auto const & p : G.points)
            lhs += p.multiplicity * std::log(std::abs(1.0 - s * s / (p.value * p.value)));
        double const rhs = report.d2 * std::abs(s) * kLog4;
        report.rows.push_back({s, lhs, rhs, lhs <= rhs});
    }

    std::vector<GrowthRow> by_radius = report.rows;
    std::sort(by_radius.begin(), by_radius.end(), [](GrowthRow const & a, GrowthRow const & b) {
        return std::abs(a.s) < std::abs(b.s);
    });
    report.r0 = std::numeric_limits<double>::quiet_NaN();
    for (auto it = by_radius.rbegin(); it != by_radius.rend() && it->ok; ++it)
        report.r0 = std::abs(it->s);
    return report;
}

double log_reciprocal_gap(MeromorphicTestFunction const & f, Complex s)
{
    // 1/f - 1/L = (L - f) / (f L)
    Complex const L = counterexample_L(s);
    double const log_gap = std::log(std::abs(L - f(s)));
    return log_gap - f.log_abs_at(s) - std::log(std::abs(L));
}

std::vector<RemarkCase> remark_counterexamples()
{
    // five fixed points off the poles and off the critical line
    std::vector<Complex> samples;
    SampleRng rng(20240501);
    while (samples.size() < 5) {
        Complex const s(rng.uniform(-5.0, 6.0), rng.uniform(-15.0, 15.0));
        if (std::abs(s) > 0.5 && std::abs(s - 1.0) > 0.5)
            samples.push_back(s);
    }

    auto const desc = counterexample_descriptor();
    std::vector<RemarkCase> out;
    auto const add = [&](std::string name, MeromorphicTestFunction f,
                         std::string violated, Complex witness) {
        RemarkCase c;
        c.name = std::move(name);
        c.sample_points = samples;
        for (Complex s : samples)
            c.fe_residuals.push_back(fe_residual(desc, f, s));
        c.violated_hypothesis = std::move(violated);
        c.witness = witness;
        c.witness_gap = std::abs(f(witness) - counterexample_L(witness));
        c.f = std::move(f);
        out.push_back(std::move(c));
    };
    add("f1", remark_f1(),
        "zero density: Z(f1) contains Z(L), whose n(r)/r tends to log4/pi", {2.0, 0.0});
    add("f2", remark_f2(), "order <= 1: f2 has order 2", {0.5, 3.0});
    add("f3", remark_f3(), "lim f = 1 as sigma -> +inf: f3 tends to 0", {2.0, 0.0});
    return out;
}

char const * zero_class_name(ZeroClass c)
{
    switch (c) {
    case ZeroClass::trivial: return "trivial";
    case ZeroClass::nontrivial: return "nontrivial";
    case ZeroClass::not_a_zero: return "not-a-zero";
    }
    return "unknown";
}

ZeroClass trivial_zero_classifier(FunctionalEquationDescriptor const & desc, Complex s,
                                  std::optional<Complex> value)
{
    if (desc.at_gamma_pole(s, 1e-9)) {
        if (value && std::abs(*value) >= 1e-6)
            return ZeroClass::not_a_zero;
        return ZeroClass::trivial;
    }
    if (value && std::abs(*value) < 1e-6)
        return ZeroClass::nontrivial;
    return ZeroClass::not_a_zero;
}

std::vector<RaySample> ray_probe(ComplexFunction const & F, double theta,
                                 std::vector<double> const & radii)
{
    std::vector<RaySample> out;
    double const angles[4] = {theta, kPi - theta, kPi + theta, 2.0 * kPi - theta};
    for (double a : angles)
        for (double r : radii)
            out.push_back({a, r, std::abs(F(std::polar(r, a)))});
    return out;
}

} // namespace zetaeta
