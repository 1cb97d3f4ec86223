#ifndef ZETAETA_DEDEKIND_HPP
#define ZETAETA_DEDEKIND_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zetaeta/common.hpp"
#include "zetaeta/eta_builder.hpp"
#include "zetaeta/zero_finder.hpp"

/*
 * Dedekind zeta functions of quadratic fields, zeta_K(s) = zeta(s) L(s, chi_D),
 * with the completed xi_K, the product h_K over critical-line zeros and the
 * companion eta_K.
 */

namespace zetaeta {

struct QuadraticFieldData
{
    std::int64_t discriminant = 0;
    int r1 = 0;
    int r2 = 0;
    std::int64_t class_number = 1;
    double regulator = 1.0;
    int roots_of_unity = 2;

    int degree() const { return r1 + 2 * r2; }
    bool imaginary() const { return discriminant < 0; }

    /// Throws InvalidArgument when any field invariant fails.
    void validate() const;
};

bool is_fundamental_discriminant(std::int64_t D);

/// Built-in invariants for D in {-4, -3, 5, 8}.
std::vector<QuadraticFieldData> builtin_field_table();

/// JSON array of {discriminant, r1, r2, class_number, regulator, roots_of_unity}.
/// FormatError on malformed input, InvalidArgument on invalid fields.
std::vector<QuadraticFieldData> load_field_table(std::string const & path);

/// Looks D up in `override_path` (if non-empty) and then the built-in table.
QuadraticFieldData lookup_field(std::int64_t D, std::string const & override_path = "");

/// Kronecker symbol (D | n) for n >= 1.
int kronecker_chi(std::int64_t D, std::uint64_t n);

struct IdealCountSeries
{
    std::vector<std::uint32_t> a; // a[n] for 1 <= n <= limit; a[0] unused
    std::uint64_t limit = 0;

    std::uint32_t operator[](std::uint64_t n) const { return a.at(n); }
};

/// a(n) = sum_{d | n} chi_D(d) for n <= limit.
IdealCountSeries ideal_counts(QuadraticFieldData const & field, std::uint64_t limit);

/// sum_{n <= limit} a(n) n^{-s}, plus residue * M^{1-s}/(s-1) when `tail` is set.
Complex ideal_series_sum(QuadraticFieldData const & field, IdealCountSeries const & series,
                         Complex s, bool tail = true);

/// L(s, chi_D) for a fundamental D != 1 (Hurwitz blocks of period |D|;
/// functional equation for Re(s) < 0).
Complex dirichlet_L(std::int64_t D, Complex s, EvalConfig const & cfg = {});

/// zeta(s) L(s, chi_D); the field functional equation for Re(s) <= 0.
/// PoleError when |s - 1| <= 1e-8.
Complex zeta_kappa(QuadraticFieldData const & field, Complex s, EvalConfig const & cfg = {});

/// The factor X(s) in zeta_K(1-s) = X(s) zeta_K(s):
/// |D|^{s-1/2} cos(pi s/2)^{r1+r2} sin(pi s/2)^{r2} Gamma_C(s)^n.
Complex kappa_fe_factor(QuadraticFieldData const & field, Complex s);

/// 2^{r1} (2 pi)^{r2} c R / (w sqrt|D|).
double class_number_formula(int r1, int r2, double class_number, double regulator,
                            double roots_of_unity, double abs_discriminant);
double class_number_formula(QuadraticFieldData const & field);

struct ResidueCheck
{
    double numeric;
    double formula;
    double rel_err;
};

/// (s-1) zeta_K(s) averaged over s = 1 +- 1e-5 against the class number formula.
ResidueCheck residue_check(QuadraticFieldData const & field, EvalConfig const & cfg = {});

/// xi_K(s) = (s/2)(s-1) |D|^{s/2} Gamma_R(s)^{r1} Gamma_C(s)^{r2} zeta_K(s).
Complex xi_kappa(QuadraticFieldData const & field, Complex s, EvalConfig const & cfg = {});

/// 2^{r1+r2-1} c R / w.
double kappa_leading_constant(QuadraticFieldData const & field);

/// Product spec over the first n_terms ordinates of a zeta_K zero list; a
/// pending list is revalidated against min(|Z|, |Z_chi|).
TruncatedProductSpec kappa_product_spec(QuadraticFieldData const & field, ZeroList zeros,
                                        std::size_t n_terms, EvalConfig const & cfg = {});

Complex h_kappa_truncated(QuadraticFieldData const & field, TruncatedProductSpec const & spec,
                          Complex s);

/// h_K / [(s/2)(s-1)|D|^{s/2} Gamma_R^{r1} Gamma_C^{r2}]; exact 0 at the
/// poles of the Gamma prefactor, PoleError when |s - 1| <= 1e-8.
Complex eta_kappa_truncated(QuadraticFieldData const & field, TruncatedProductSpec const & spec,
                            Complex s, EvalConfig const & cfg = {});

/// |eta_K(1-s) - X(s) eta_K(s)| / (1 + |eta_K(1-s)|).
double eta_kappa_fe_residual(QuadraticFieldData const & field, TruncatedProductSpec const & spec,
                             Complex s, EvalConfig const & cfg = {});

/// h_K(1) / [(1/2)|D|^{1/2} Gamma_R(1)^{r1} Gamma_C(1)^{r2}].
double eta_kappa_residue_symbolic(QuadraticFieldData const & field,
                                  TruncatedProductSpec const & spec);

/// (s-1) eta_K(s) averaged over s = 1 +- delta.
double eta_kappa_residue_numeric(QuadraticFieldData const & field,
                                 TruncatedProductSpec const & spec, double delta = 1e-6,
                                 EvalConfig const & cfg = {});

/// theta_chi(t) = (t/2) log(|D|/pi) + Im log Gamma((1/2 + a + it)/2),
/// a = 1 for D < 0 and 0 for D > 0.
double theta_chi(std::int64_t D, double t);

/// exp(i theta_chi(t)) L(1/2 + it, chi_D), real up to rounding.
Complex rotated_L(std::int64_t D, double t, EvalConfig const & cfg = {});

/// Real part of rotated_L; ConsistencyError when |Im| >= 1e-8 (1 + |value|).
double hardy_Z_chi(std::int64_t D, double t, EvalConfig const & cfg = {});

/// Critical-line zeros of L(s, chi_D) with 0 < t <= t_max (1 <= t_max <= 2000).
/// CompletenessError when the count is off round(theta_chi(t_max)/pi) by more than 1.
ZeroList find_L_zeros(std::int64_t D, double t_max, EvalConfig const & cfg = {});

/// Sorted union; ordinates closer than 1e-8 raise ConsistencyError.
ZeroList merge_zero_lists(ZeroList const & a, ZeroList const & b, std::string const & tag);

/// Zeros of zeta_K up to t_max (10 < t_max <= 2000), tagged "dedekind D=<D>".
ZeroList kappa_zeros(QuadraticFieldData const & field, double t_max,
                     EvalConfig const & cfg = {});

/// At least `count` zeros of zeta_K.
ZeroList kappa_first_zeros(QuadraticFieldData const & field, std::size_t count,
                           EvalConfig const & cfg = {});

/// min(|Z(t)|, |Z_chi(t)|), the revalidation function for zeta_K lists.
CriticalLineFunction kappa_validator(QuadraticFieldData const & field,
                                     EvalConfig const & cfg = {});

} // namespace zetaeta

#endif
