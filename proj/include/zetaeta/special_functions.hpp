#ifndef ZETAETA_SPECIAL_FUNCTIONS_HPP
#define ZETAETA_SPECIAL_FUNCTIONS_HPP

#include "zetaeta/common.hpp"

/*
 * Complex-plane Gamma, log-Gamma, Riemann zeta, the completed xi function,
 * the Riemann-Siegel theta phase and the Hardy Z function, all in binary64.
 *
 * Accuracy targets: Gamma relative 1e-12 for |s| <= 100, zeta absolute
 * 1e-10 for |Im s| <= 1000 and 1e-8 up to |Im s| <= 12000 on
 * -10 <= Re s <= 10.
 */

namespace zetaeta {

/// Gamma(s). Lanczos (g = 607/128, 15 coefficients) with reflection for
/// Re(s) < 1/2. Throws PoleError within 1e-12 of a non-positive integer.
Complex complex_gamma(Complex s);

/// Continuous branch of log Gamma on Re(s) > 0 (real on the positive axis).
/// Throws DomainError for Re(s) <= 0.
Complex complex_log_gamma(Complex s);

/// zeta(s): Euler-Maclaurin for Re(s) >= 1/2 (and near s = 0), the
/// reflection formula elsewhere. Throws PoleError when |s - 1| <= 1e-8.
Complex complex_zeta(Complex s, EvalConfig const & cfg = {});

/// (s - 1) zeta(s), regular at s = 1 (value 1 there).
Complex zeta_times_s_minus_one(Complex s, EvalConfig const & cfg = {});

/// Hurwitz zeta(s, x) for x > 0 and Re(s) >= -1 by Euler-Maclaurin
/// (DomainError further left). Throws PoleError at s = 1.
Complex hurwitz_zeta(Complex s, double x, EvalConfig const & cfg = {});

/// xi(s) = (s/2)(s-1) pi^{-s/2} Gamma(s/2) zeta(s); entire.
Complex xi(Complex s, EvalConfig const & cfg = {});

/// The factor in zeta(1-s) = chi(s) zeta(s): 2 (2 pi)^{-s} cos(pi s / 2) Gamma(s).
Complex riemann_fe_factor(Complex s);

/// pi^{-s+1/2} Gamma(s/2) / Gamma((1-s)/2), the same factor by a second route.
Complex riemann_fe_factor_gamma_ratio(Complex s);

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi. DomainError for t <= 0.
double riemann_siegel_theta(double t);

/// Z(t) = exp(i theta(t)) zeta(1/2 + it). The imaginary part of the product
/// must stay below 1e-8 (1 + |Z|); otherwise ConsistencyError.
double hardy_Z(double t, EvalConfig const & cfg = {});

namespace detail {

/// Effective Euler-Maclaurin cutoff for an argument s.
int em_cutoff(Complex s, EvalConfig const & cfg);

/// Hurwitz zeta split as regular + exp((1-s) tail_log) / (s-1).
struct EmParts
{
    Complex regular;
    double tail_log;
};

EmParts hurwitz_em_parts(Complex s, double x, int cutoff, EvalConfig const & cfg);

/// log(sin z) and log(cos z) up to multiples of 2 pi i, safe for large |Im z|.
Complex log_sin(Complex z);
Complex log_cos(Complex z);

/// log Gamma(z) for any z off the poles (reflection for Re z < 1/2).
/// Branch is not continuous across the reflection; callers exponentiate.
Complex log_gamma_any(Complex z);

/// expm1(z) / z, continuous at z = 0.
Complex expm1_over_z(Complex z);

} // namespace detail

} // namespace zetaeta

#endif
