#include "zetaeta/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

namespace zetaeta {

namespace {

constexpr double kLogPi = 1.14472988584940017414;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLog2Pi = 1.83787706640934548356;
constexpr double kSqrt2Pi = 2.5066282746310005024;

/* Lanczos coefficients, g = 607/128, for Gamma(z + 1). */
constexpr double kLanczosG5 = 671.0 / 128.0; // g + 1/2
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,
    -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};

/* B_{2k} / (2k)! for k = 1..15 */
constexpr std::array<double, 15> bernoulli_over_factorial()
{
    constexpr std::array<double, 15> num = {
        1.0, -1.0, 1.0, -1.0, 5.0, -691.0, 7.0, -3617.0, 43867.0,
        -174611.0, 854513.0, -236364091.0, 8553103.0, -23749461029.0,
        8615841276005.0,
    };
    constexpr std::array<double, 15> den = {
        6.0, 30.0, 42.0, 30.0, 66.0, 2730.0, 6.0, 510.0, 798.0,
        330.0, 138.0, 2730.0, 6.0, 870.0, 14322.0,
    };
    std::array<double, 15> out{};
    double fact = 1.0;
    for (int k = 1; k <= 15; ++k) {
        fact *= static_cast<double>((2 * k - 1) * (2 * k));
        out[k - 1] = num[k - 1] / den[k - 1] / fact;
    }
    return out;
}

constexpr std::array<double, 15> kBernoulliCoeff = bernoulli_over_factorial();

Complex lanczos_log_gamma(Complex z)
{
    Complex ser(kLanczosC0, 0.0);
    Complex y = z;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    Complex const t = z + kLanczosG5;
    return (z + 0.5) * std::log(t) - t + std::log(kSqrt2Pi) + std::log(ser)
           - std::log(z);
}

bool near_nonpositive_integer(Complex s, double tol)
{
    double const k = std::round(s.real());
    return k <= 0.0 && std::abs(s - k) <= tol;
}

bool is_negative_even_integer(Complex s)
{
    return s.imag() == 0.0 && s.real() < 0.0 && std::fmod(s.real(), 2.0) == 0.0;
}

} // namespace

namespace detail {

int em_cutoff(Complex s, EvalConfig const & cfg)
{
    double const need = std::ceil(std::abs(s.imag()) / 2.0 + 10.0);
    int n = static_cast<int>(need);
    if (n < 20)
        n = 20;
    return n < cfg.em_terms ? cfg.em_terms : n;
}

EmParts hurwitz_em_parts(Complex s, double x, int cutoff, EvalConfig const & cfg)
{
    Complex sum(0.0, 0.0);
    for (int n = 0; n < cutoff; ++n)
        sum += std::exp(-s * std::log(n + x));

    double const a = cutoff + x;
    double const log_a = std::log(a);
    Complex const a_pow = std::exp(-s * log_a); // a^{-s}
    sum += 0.5 * a_pow;

    double const stop = cfg.target_abs_error * 1e-2;
    Complex poch = s;               // s (s+1) ... (s+2k-2)
    Complex power = a_pow / a;      // a^{-s-2k+1}
    double const inv_a2 = 1.0 / (a * a);
    int const kmax = cfg.bernoulli_order / 2;
    for (int k = 1; k <= kmax; ++k) {
        Complex const term = kBernoulliCoeff[k - 1] * poch * power;
        sum += term;
        if (std::abs(term) < stop)
            break;
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        power *= inv_a2;
    }
    return {sum, log_a};
}

Complex log_sin(Complex z)
{
    constexpr Complex i(0.0, 1.0);
    if (std::abs(z.imag()) < 20.0)
        return std::log(std::sin(z));
    if (z.imag() > 0.0)
        return -i * z + std::log((std::exp(2.0 * i * z) - 1.0) / (2.0 * i));
    return i * z + std::log((1.0 - std::exp(-2.0 * i * z)) / (2.0 * i));
}

Complex log_cos(Complex z)
{
    return log_sin(z + kPi / 2.0);
}

Complex log_gamma_any(Complex z)
{
    if (z.real() >= 0.5)
        return lanczos_log_gamma(z);
    return kLogPi - log_sin(kPi * z) - lanczos_log_gamma(1.0 - z);
}

Complex expm1_over_z(Complex z)
{
    if (z == Complex(0.0, 0.0))
        return {1.0, 0.0};
    double const a = z.real();
    double const b = z.imag();
    double const sh = std::sin(b / 2.0);
    Complex const em1(std::expm1(a) * std::cos(b) - 2.0 * sh * sh,
                      std::exp(a) * std::sin(b));
    if (std::abs(z) < 1e-8)
        return 1.0 + z / 2.0;
    return em1 / z;
}

} // namespace detail

Complex complex_log_gamma(Complex s)
{
    if (!(s.real() > 0.0))
        throw DomainError("complex_log_gamma requires Re(s) > 0");
    return lanczos_log_gamma(s);
}

Complex complex_gamma(Complex s)
{
    if (near_nonpositive_integer(s, 1e-12))
        throw PoleError("Gamma has a pole at s = " + std::to_string(std::round(s.real())));
    if (s.real() >= 0.5)
        return std::exp(lanczos_log_gamma(s));
    // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    if (std::abs(s.imag()) < 30.0)
        return kPi / (std::sin(kPi * s) * std::exp(lanczos_log_gamma(1.0 - s)));
    return std::exp(kLogPi - detail::log_sin(kPi * s) - lanczos_log_gamma(1.0 - s));
}

Complex hurwitz_zeta(Complex s, double x, EvalConfig const & cfg)
{
    cfg.validate();
    if (!(x > 0.0))
        throw InvalidArgument("hurwitz_zeta requires x > 0");
    // the partial sum cancels catastrophically further left
    if (s.real() < -1.0)
        throw DomainError("hurwitz_zeta requires Re(s) >= -1");
    if (std::abs(s - 1.0) <= 1e-8)
        throw PoleError("zeta has a pole at s = 1");
    auto const parts = detail::hurwitz_em_parts(s, x, detail::em_cutoff(s, cfg), cfg);
    return parts.regular + std::exp((1.0 - s) * parts.tail_log) / (s - 1.0);
}

namespace {

bool use_direct_em(Complex s)
{
    return s.real() >= 0.5 || std::abs(s) < 0.25;
}

/* 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), the reflection multiplier, in log form. */
Complex log_reflection_factor(Complex s)
{
    return s * kLog2 + (s - 1.0) * kLogPi + detail::log_sin(kPi * s / 2.0)
           + lanczos_log_gamma(1.0 - s);
}

} // namespace

Complex complex_zeta(Complex s, EvalConfig const & cfg)
{
    cfg.validate();
    if (std::abs(s - 1.0) <= 1e-8)
        throw PoleError("zeta has a pole at s = 1");
    if (use_direct_em(s)) {
        auto const parts = detail::hurwitz_em_parts(s, 1.0, detail::em_cutoff(s, cfg), cfg);
        return parts.regular + std::exp((1.0 - s) * parts.tail_log) / (s - 1.0);
    }
    if (is_negative_even_integer(s))
        return {0.0, 0.0};
    return std::exp(log_reflection_factor(s)) * complex_zeta(1.0 - s, cfg);
}

Complex zeta_times_s_minus_one(Complex s, EvalConfig const & cfg)
{
    cfg.validate();
    if (use_direct_em(s)) {
        auto const parts = detail::hurwitz_em_parts(s, 1.0, detail::em_cutoff(s, cfg), cfg);
        return (s - 1.0) * parts.regular + std::exp((1.0 - s) * parts.tail_log);
    }
    return (s - 1.0) * complex_zeta(s, cfg);
}

Complex xi(Complex s, EvalConfig const & cfg)
{
    // (s/2) Gamma(s/2) = Gamma(1 + s/2) removes the pole at 0; (s-1) zeta(s)
    // is regular at 1.
    Complex const half = 1.0 + s / 2.0;
    Complex const rz = zeta_times_s_minus_one(s, cfg);
    if (half.real() > 0.0)
        return std::exp(lanczos_log_gamma(half) - (s / 2.0) * kLogPi) * rz;
    if (near_nonpositive_integer(half, 1e-12))
        return xi(1.0 - s, cfg);
    return complex_gamma(half) * std::exp(-(s / 2.0) * kLogPi) * rz;
}

Complex riemann_fe_factor(Complex s)
{
    if (s.real() > 0.0) {
        return std::exp(kLog2 - s * kLog2Pi + detail::log_cos(kPi * s / 2.0)
                        + lanczos_log_gamma(s));
    }
    return 2.0 * std::exp(-s * kLog2Pi) * std::cos(kPi * s / 2.0) * complex_gamma(s);
}

Complex riemann_fe_factor_gamma_ratio(Complex s)
{
    return std::exp((0.5 - s) * kLogPi) * complex_gamma(s / 2.0)
           / complex_gamma((1.0 - s) / 2.0);
}

double riemann_siegel_theta(double t)
{
    if (!(t > 0.0))
        throw DomainError("riemann_siegel_theta requires t > 0");
    return lanczos_log_gamma(Complex(0.25, t / 2.0)).imag() - t / 2.0 * kLogPi;
}

double hardy_Z(double t, EvalConfig const & cfg)
{
    if (!(t > 0.0))
        throw DomainError("hardy_Z requires t > 0");
    double const theta = riemann_siegel_theta(t);
    Complex const z = std::polar(1.0, theta) * complex_zeta(Complex(0.5, t), cfg);
    if (std::abs(z.imag()) >= 1e-8 * (1.0 + std::abs(z.real())))
        throw ConsistencyError("Z(t) has a non-negligible imaginary part at t = "
                               + std::to_string(t));
    return z.real();
}

} // namespace zetaeta
