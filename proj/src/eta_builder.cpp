#include "zetaeta/eta_builder.hpp"

#include <cmath>
#include <limits>

#include "zetaeta/special_functions.hpp"

namespace zetaeta {

namespace {

constexpr double kLogPi = 1.14472988584940017414;
constexpr double kDirectRadius = 50.0;

/// s - s^2 built from components so that s and 1 - s give bit-identical results.
Complex symmetric_weight(Complex s)
{
    double const a = s.real();
    double const b = s.imag();
    return {a * (1.0 - a) + b * b, b * (1.0 - 2.0 * a)};
}

bool near_trivial_zero(Complex s)
{
    if (std::abs(s.imag()) > 1e-10 || s.real() > -1.0)
        return false;
    double const k = std::round(s.real() / 2.0);
    return std::abs(s - 2.0 * k) <= 1e-10;
}

/// log of the xi prefactor (s/2)(s-1) pi^{-s/2} Gamma(s/2) = Gamma(1+s/2)(s-1)pi^{-s/2}.
Complex log_eta_denominator(Complex s)
{
    return detail::log_gamma_any(1.0 + s / 2.0) + std::log(s - 1.0) - (s / 2.0) * kLogPi;
}

Complex eta_denominator(Complex s)
{
    return complex_gamma(1.0 + s / 2.0) * (s - 1.0) * std::exp(-(s / 2.0) * kLogPi);
}

} // namespace

TruncatedProductSpec::TruncatedProductSpec(ZeroList zeros, std::size_t n_terms,
                                           double leading_constant,
                                           CriticalLineFunction const & validator,
                                           EvalConfig const & cfg)
    : zeros_(std::move(zeros)), n_terms_(n_terms), leading_constant_(leading_constant)
{
    if (n_terms_ == 0)
        throw InvalidArgument("a truncated product needs at least one factor");
    if (n_terms_ > zeros_.size())
        throw InvalidArgument("n_terms = " + std::to_string(n_terms_)
                              + " exceeds the " + std::to_string(zeros_.size())
                              + " available zeros");
    if (!(leading_constant_ > 0.0))
        throw InvalidArgument("leading constant must be positive");
    zeros_.check_invariants();
    ensure_validated(zeros_, validator, cfg);

    norms_.reserve(n_terms_);
    for (std::size_t i = 0; i < n_terms_; ++i) {
        double const t = zeros_.ordinates[i];
        norms_.push_back(0.25 + t * t);
    }
}

Complex log_h_truncated(TruncatedProductSpec const & spec, Complex s)
{
    Complex const w = symmetric_weight(s);
    Complex acc(std::log(spec.leading_constant()), 0.0);
    for (double d : spec.norms()) {
        Complex const f = 1.0 - w / d;
        if (f == Complex(0.0, 0.0))
            return {-std::numeric_limits<double>::infinity(), 0.0};
        acc += std::log(f);
    }
    return acc;
}

Complex h_truncated(TruncatedProductSpec const & spec, Complex s)
{
    if (std::abs(s) > kDirectRadius) {
        Complex const lg = log_h_truncated(spec, s);
        if (std::isinf(lg.real()) && lg.real() < 0.0)
            return {0.0, 0.0};
        return std::exp(lg);
    }
    Complex const w = symmetric_weight(s);
    Complex prod(spec.leading_constant(), 0.0);
    for (double d : spec.norms())
        prod *= 1.0 - w / d;
    return prod;
}

Complex eta_truncated(TruncatedProductSpec const & spec, Complex s, EvalConfig const & cfg)
{
    cfg.validate();
    if (std::abs(s - 1.0) <= 1e-8)
        throw PoleError("eta has a pole at s = 1");
    if (near_trivial_zero(s))
        return {0.0, 0.0};
    if (std::abs(s) > kDirectRadius) {
        Complex const lg = log_h_truncated(spec, s);
        if (std::isinf(lg.real()) && lg.real() < 0.0)
            return {0.0, 0.0};
        return std::exp(lg - log_eta_denominator(s));
    }
    return h_truncated(spec, s) / eta_denominator(s);
}

double eta_fe_residual(TruncatedProductSpec const & spec, Complex s, EvalConfig const & cfg)
{
    Complex const lhs = eta_truncated(spec, 1.0 - s, cfg);
    Complex const rhs = riemann_fe_factor(s) * eta_truncated(spec, s, cfg);
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

double eta_residue_at_one(TruncatedProductSpec const & spec)
{
    // (s-1) eta -> h(1) / [(1/2) pi^{-1/2} Gamma(1/2)] and sqrt(pi)/Gamma(1/2) = 1
    return 2.0 * h_truncated(spec, Complex(1.0, 0.0)).real();
}

double eta_residue_numeric(TruncatedProductSpec const & spec, double delta,
                           EvalConfig const & cfg)
{
    if (!(delta > 1e-8))
        throw InvalidArgument("residue offset must exceed the pole window");
    Complex const up = delta * eta_truncated(spec, Complex(1.0 + delta, 0.0), cfg);
    Complex const down = -delta * eta_truncated(spec, Complex(1.0 - delta, 0.0), cfg);
    return 0.5 * (up + down).real();
}

double product_tail_estimate(double t_last)
{
    if (!(t_last > 2.0 * kPi))
        throw InvalidArgument("tail estimate needs t_N > 2 pi");
    return (std::log(t_last / (2.0 * kPi)) + 1.0) / (2.0 * kPi * t_last);
}

double sigma_tail_bound(TruncatedProductSpec const & spec, double sigma)
{
    return std::abs(sigma * (1.0 - sigma)) * product_tail_estimate(spec.last_ordinate());
}

std::vector<SigmaScanRow> sigma_scan(TruncatedProductSpec const & spec,
                                     std::vector<double> const & sigmas,
                                     EvalConfig const & cfg)
{
    std::vector<SigmaScanRow> rows;
    rows.reserve(sigmas.size());
    for (double sigma : sigmas) {
        if (!(sigma > 1.0))
            throw InvalidArgument("sigma_scan needs sigma > 1");
        rows.push_back({sigma, eta_truncated(spec, Complex(sigma, 0.0), cfg),
                        sigma_tail_bound(spec, sigma), spec.n_terms()});
    }
    return rows;
}

int argument_principle_count(std::function<Complex(Complex)> const & f,
                             Complex lo, Complex hi, int samples_per_edge)
{
    if (!(hi.real() > lo.real() && hi.imag() > lo.imag()) || samples_per_edge < 4)
        throw InvalidArgument("degenerate rectangle for argument principle");
    Complex const corners[5] = {lo, {hi.real(), lo.imag()}, hi, {lo.real(), hi.imag()}, lo};
    double winding = 0.0;
    Complex prev = f(lo);
    for (int edge = 0; edge < 4; ++edge) {
        for (int k = 1; k <= samples_per_edge; ++k) {
            double const u = static_cast<double>(k) / samples_per_edge;
            Complex const cur = f(corners[edge] + u * (corners[edge + 1] - corners[edge]));
            if (cur == Complex(0.0, 0.0) || prev == Complex(0.0, 0.0))
                throw DomainError("function vanishes on the contour");
            winding += std::arg(cur / prev);
            prev = cur;
        }
    }
    return static_cast<int>(std::lround(winding / (2.0 * kPi)));
}

double growth_constant(TruncatedProductSpec const & spec, double radius, int samples)
{
    if (!(radius > 1.0) || samples < 1)
        throw InvalidArgument("growth_constant needs radius > 1 and samples >= 1");
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        double const phi = 2.0 * kPi * (k + 0.5) / samples;
        double const v = log_h_truncated(spec, std::polar(radius, phi)).real();
        best = std::max(best, v);
    }
    return best / (radius * std::log(radius));
}

} // namespace zetaeta
