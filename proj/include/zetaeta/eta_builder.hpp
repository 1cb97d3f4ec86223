#ifndef ZETAETA_ETA_BUILDER_HPP
#define ZETAETA_ETA_BUILDER_HPP

#include <functional>
#include <vector>

#include "zetaeta/common.hpp"
#include "zetaeta/zero_finder.hpp"

namespace zetaeta {

/*
 * The symmetric product h_N(s) = c * prod_{nu <= N} (1 - (s - s^2) / |s_nu|^2)
 * over the first N critical-line zeros, s_nu = 1/2 + i t_nu.
 *
 * Constructing a spec from a list that still awaits revalidation runs the
 * revalidation first (with `validator`, or Hardy Z for plain zeta lists).
 */
class TruncatedProductSpec
{
    ZeroList zeros_;
    std::size_t n_terms_;
    double leading_constant_;
    std::vector<double> norms_; // 1/4 + t_nu^2

    public:

    TruncatedProductSpec(ZeroList zeros, std::size_t n_terms,
                         double leading_constant = 0.5,
                         CriticalLineFunction const & validator = {},
                         EvalConfig const & cfg = {});

    ZeroList const & zeros() const { return zeros_; }
    std::size_t n_terms() const { return n_terms_; }
    double leading_constant() const { return leading_constant_; }
    std::vector<double> const & norms() const { return norms_; }

    /// Largest ordinate used by the product.
    double last_ordinate() const { return zeros_.ordinates[n_terms_ - 1]; }
};

/// h_N(s). Plain product for |s| <= 50, log-accumulated beyond.
Complex h_truncated(TruncatedProductSpec const & spec, Complex s);

/// log h_N(s) on some branch; real part is log|h_N(s)| (-inf at a zero).
Complex log_h_truncated(TruncatedProductSpec const & spec, Complex s);

/// eta_N(s) = h_N(s) / [(s/2)(s-1) pi^{-s/2} Gamma(s/2)].
/// Exact 0 within 1e-10 of s = -2, -4, ...; PoleError when |s - 1| <= 1e-8.
Complex eta_truncated(TruncatedProductSpec const & spec, Complex s,
                      EvalConfig const & cfg = {});

/// |eta(1-s) - 2(2 pi)^{-s} cos(pi s/2) Gamma(s) eta(s)| / (1 + |eta(1-s)|).
double eta_fe_residual(TruncatedProductSpec const & spec, Complex s,
                       EvalConfig const & cfg = {});

/// Residue at s = 1 from h_N(1) = c: exactly 2c.
double eta_residue_at_one(TruncatedProductSpec const & spec);

/// (s-1) eta_N(s) averaged over s = 1 +- delta.
double eta_residue_numeric(TruncatedProductSpec const & spec, double delta = 1e-6,
                           EvalConfig const & cfg = {});

/// Density estimate of sum_{nu > N} 1/(1/4 + t_nu^2) given t_N:
/// integral_{t_N}^inf log(t/2pi)/(2pi t^2) dt = (log(t_N/2pi) + 1) / (2pi t_N).
double product_tail_estimate(double t_last);

/// |sigma (1 - sigma)| * product_tail_estimate(t_N).
double sigma_tail_bound(TruncatedProductSpec const & spec, double sigma);

struct SigmaScanRow
{
    double sigma;
    Complex value;
    double tail_bound;
    std::size_t n_terms;
};

/// eta_N(sigma) on the real axis for each sigma > 1, in input order.
std::vector<SigmaScanRow> sigma_scan(TruncatedProductSpec const & spec,
                                     std::vector<double> const & sigmas,
                                     EvalConfig const & cfg = {});

/// Winding number of f around the boundary of the rectangle [lo, hi],
/// tracked with `samples_per_edge` points per side. Equals the number of
/// zeros inside when f is analytic there and nonzero on the boundary.
int argument_principle_count(std::function<Complex(Complex)> const & f,
                             Complex lo, Complex hi, int samples_per_edge = 200);

/// max over |s| = R of log|h_N(s)| / (R log R), sampled at `samples` points.
double growth_constant(TruncatedProductSpec const & spec, double radius,
                       int samples = 256);

} // namespace zetaeta

#endif
