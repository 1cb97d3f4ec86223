#ifndef ZETAETA_UNIQUENESS_HPP
#define ZETAETA_UNIQUENESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetaeta/common.hpp"
#include "zetaeta/zero_finder.hpp"

namespace zetaeta {

using ComplexFunction = std::function<Complex(Complex)>;

struct GammaFactor
{
    double lambda;
    Complex mu;
};

/*
 * Lambda(s) = L(s) Q^s prod_j Gamma(lambda_j s + mu_j) together with the
 * root number omega of Lambda(s) = omega conj(Lambda(1 - conj(s))).
 */
class FunctionalEquationDescriptor
{
    double q_scale_;
    std::vector<GammaFactor> gamma_factors_;
    Complex root_number_;

    public:

    FunctionalEquationDescriptor(double q_scale, std::vector<GammaFactor> gamma_factors,
                                 Complex root_number = {1.0, 0.0});

    double q_scale() const { return q_scale_; }
    std::vector<GammaFactor> const & gamma_factors() const { return gamma_factors_; }
    Complex root_number() const { return root_number_; }

    /// Q^s prod Gamma(lambda_j s + mu_j). PoleError within 1e-8 of a Gamma pole.
    Complex gamma_part(Complex s) const;

    /// True when some lambda_j s + mu_j lies within `tol` of 0, -1, -2, ...
    bool at_gamma_pole(Complex s, double tol) const;
};

/// Dirichlet series with a(1) = 1. Without a truncation the coefficient map
/// is the whole (finite) series; with one, coefficients beyond it are ignored.
class DirichletSeries
{
    std::map<std::uint64_t, Complex> coefficients_;
    std::optional<std::uint64_t> truncation_;

    public:

    explicit DirichletSeries(std::map<std::uint64_t, Complex> coefficients,
                             std::optional<std::uint64_t> truncation = std::nullopt);

    std::map<std::uint64_t, Complex> const & coefficients() const { return coefficients_; }
    bool exact_polynomial() const { return !truncation_.has_value(); }
    std::optional<std::uint64_t> truncation() const { return truncation_; }

    Complex operator()(Complex s) const;
};

struct MeromorphicTestFunction
{
    ComplexFunction evaluator;
    std::string description;
    double claimed_order = 1.0;
    std::vector<Complex> poles;
    /// Optional overflow-safe log|f(s)|.
    std::function<double(Complex)> log_abs;

    Complex operator()(Complex s) const { return evaluator(s); }
    double log_abs_at(Complex s) const;
};

/// |Lambda(s) - omega conj(Lambda(1 - conj(s)))| / (1 + |Lambda(s)|).
/// PoleError within 1e-8 of a pole of f or of a Gamma factor.
double fe_residual(FunctionalEquationDescriptor const & desc,
                   MeromorphicTestFunction const & f, Complex s);
double fe_residual(FunctionalEquationDescriptor const & desc,
                   DirichletSeries const & series, Complex s);

/// L(s) = 1 + 2 * 4^{-s} and its descriptor (Q = 2, no Gamma factors, omega = 1).
DirichletSeries counterexample_series();
FunctionalEquationDescriptor counterexample_descriptor();
Complex counterexample_L(Complex s);

/// Q = pi^{-1/2}, one factor Gamma(s/2), omega = 1.
FunctionalEquationDescriptor zeta_descriptor();
MeromorphicTestFunction zeta_test_function(EvalConfig const & cfg = {});

/// Zeros s_k = (ln 2 + (2k+1) pi i) / ln 4 of L for k_lo <= k <= k_hi.
PointSet counterexample_zero_set(std::int64_t k_lo, std::int64_t k_hi);

/// f1 = (1 + 1/(s(1-s))) L, f2 = L / (1 + e^{s(1-s)}), f3 = L / (s(1-s)).
MeromorphicTestFunction remark_f1();
MeromorphicTestFunction remark_f2();
MeromorphicTestFunction remark_f3();

/// Zeros of f1: the zeros of L with |k| bounded as given, plus (1 +- sqrt 5)/2.
PointSet f1_zero_set(std::int64_t k_lo, std::int64_t k_hi);

struct FProbe
{
    bool finite_at_plus_one;
    bool finite_at_minus_one;
    double value_at_zero;  // |F(0)| extrapolated along the real axis
    bool ok;
};

/// Numerical limit probes for F at s = +-1 and s = 0.
FProbe probe_F(ComplexFunction const & F);

/// F(s) = (s^2-1)^m s^n [(L-f)/f](s) [(L-f)/f](-s) prod_{rho in G} (1 - s^2/rho^2).
/// InvalidArgument when 0 is in G or |m|, |n| > 8; ConfigError when the
/// probes find a pole at +-1 or F(0) != 0 for this (m, n).
ComplexFunction build_F(DirichletSeries const & L, MeromorphicTestFunction const & f,
                        PointSet const & G, int m, int n);

struct FExponents
{
    int m;
    int n;
    ComplexFunction F;
};

/// First (m, n) with |m|, |n| <= 8 (ordered by |m|+|n|, then m, then n) for
/// which build_F succeeds. ConfigError when none does.
FExponents scan_F_exponents(DirichletSeries const & L, MeromorphicTestFunction const & f,
                            PointSet const & G);

struct GrowthRow
{
    Complex s;
    double lhs;
    double rhs;
    bool ok;
};

struct GrowthReport
{
    std::vector<GrowthRow> rows;
    double d2;
    /// Smallest sampled radius from which every row is ok (NaN if the
    /// largest sample fails).
    double r0;
    bool all_ok() const;
};

/// log|prod (1 - s^2/rho^2)| <= d2 |s| log 4 with d2 = (1 + d1)/2.
/// DensityError when n(r, G)/r >= d1 log4/pi at any sampled radius.
GrowthReport product_growth_check(PointSet const & G, std::vector<Complex> const & samples,
                                  double d1);

struct RemarkCase
{
    std::string name;
    MeromorphicTestFunction f;
    std::vector<Complex> sample_points;
    std::vector<double> fe_residuals;
    std::string violated_hypothesis;
    Complex witness;
    double witness_gap; // |f - L| at the witness
};

/// f1, f2 and f3, each with the hypothesis it violates and its property report.
std::vector<RemarkCase> remark_counterexamples();

/// log|1/f - 1/L| at s, from log-magnitudes so that tiny f stays finite.
double log_reciprocal_gap(MeromorphicTestFunction const & f, Complex s);

enum class ZeroClass { trivial, nontrivial, not_a_zero };

char const * zero_class_name(ZeroClass c);

/// Trivial iff some Gamma factor has a pole at s (within 1e-9), unless the
/// supplied value shows L(s) clearly nonzero. Otherwise the value decides.
ZeroClass trivial_zero_classifier(FunctionalEquationDescriptor const & desc, Complex s,
                                  std::optional<Complex> value = std::nullopt);

struct RaySample
{
    double angle;
    double radius;
    double abs_value;
};

/// |F| along the rays arg s in {theta, pi - theta, pi + theta, 2pi - theta}.
/// Diagnostic only.
std::vector<RaySample> ray_probe(ComplexFunction const & F, double theta,
                                 std::vector<double> const & radii);

} // namespace zetaeta

#endif
