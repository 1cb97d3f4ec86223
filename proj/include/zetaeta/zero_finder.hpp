#ifndef ZETAETA_ZERO_FINDER_HPP
#define ZETAETA_ZERO_FINDER_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "zetaeta/common.hpp"

namespace zetaeta {

/// Real-valued critical-line function whose zeros a ZeroList records.
using CriticalLineFunction = std::function<double(double)>;

/*
 * Ordinates t of critical-line zeros 1/2 + it, strictly increasing and
 * positive. Lists read from disk carry `validation_pending`; the first
 * consumer that builds a product from them revalidates every ordinate.
 * All zeros are recorded with multiplicity one.
 */
struct ZeroList
{
    std::vector<double> ordinates;
    std::string source_tag = "zeta";
    double max_t_searched = 0.0;
    bool validation_pending = false;

    std::size_t size() const { return ordinates.size(); }

    /// Throws InvalidArgument unless strictly increasing and positive.
    void check_invariants() const;
};

struct WeightedPoint
{
    Complex value;
    int multiplicity = 1;
};

/// A multiset of points in the plane (a set G or a zero set).
struct PointSet
{
    std::vector<WeightedPoint> points;

    void add(Complex z, int multiplicity = 1);
    std::size_t total_multiplicity() const;
};

struct DensityPoint
{
    double r;
    double slope; // n(r) / r
};

/// Grid spacing used by find_zeros_up_to for a given height.
double zero_scan_step(double t_max);

/// Sign changes of an arbitrary real function on (0, t_max], each refined by
/// bisection to a bracket narrower than 1e-9. `step` is the grid spacing.
std::vector<double> scan_sign_changes(CriticalLineFunction const & fn,
                                      double t_max, double step);

/// All critical-line zeros of zeta with 0 < t <= t_max (10 < t_max <= 12000).
/// The count is arbitrated against round(theta(t_max)/pi + 1) +- 1; on a
/// mismatch the grid is halved, up to three times, before CompletenessError.
ZeroList find_zeros_up_to(double t_max, EvalConfig const & cfg = {});

/// At least the first `count` zeros, searching up to the height where the
/// smooth counting function reaches count + 2.
ZeroList find_first_zeros(std::size_t count, EvalConfig const & cfg = {});

/// Smooth zero count theta(t)/pi + 1.
double smooth_zero_count(double t);

/// Multiplicity-weighted number of points with |z| <= r.
std::size_t disc_count(PointSet const & set, double r);

/// Same for the points 1/2 + i t_nu of a zero list (conjugates excluded).
std::size_t disc_count(ZeroList const & list, double r);

/// Points 1/2 + i t_nu, and their conjugates when `symmetrize` is set.
PointSet to_point_set(ZeroList const & list, bool symmetrize = false);
PointSet symmetrize(ZeroList const & list);

/// n(r)/r for each requested radius (positive and increasing).
std::vector<DensityPoint> density_slope(PointSet const & set,
                                        std::vector<double> const & r_values);

/// Cache format: "# zeta-zeros v1 count=<N> tmax=<T>[ <tag>]" then one
/// ordinate per line with 15 significant digits. Written atomically.
void save_zeros(ZeroList const & list, std::string const & path);

/// Parses a cache file (FormatError on any malformation). The returned list
/// is marked for lazy revalidation.
ZeroList load_zeros(std::string const & path);

/// Revalidates a pending list: |fn(t)| < 1e-6 for every ordinate, else
/// ValidationError. When `fn` is empty the Hardy Z function is used for
/// lists tagged "zeta"; any other tag without a validator is rejected.
void ensure_validated(ZeroList & list, CriticalLineFunction const & fn = {},
                      EvalConfig const & cfg = {});

/// Loads `path` when it holds at least `min_count` zeros, otherwise computes
/// them and rewrites the file.
ZeroList ensure_zero_cache(std::string const & path, std::size_t min_count,
                           EvalConfig const & cfg = {});

} // namespace zetaeta

#endif
