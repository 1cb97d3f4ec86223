#ifndef ZETAETA_REPORTS_HPP
#define ZETAETA_REPORTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zetaeta/common.hpp"
#include "zetaeta/zero_finder.hpp"

/*
 * Seeded experiment suites behind the CLI: functional-equation residual
 * batteries and the uniqueness-theorem cases, reported as flat records.
 */

namespace zetaeta {

struct ReportRecord
{
    std::string case_name;
    std::string sample;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    std::string verdict; // "pass", "fail" or "info"
};

struct Report
{
    std::vector<ReportRecord> records;

    bool passed() const;
    /// First failing record, or nullptr.
    ReportRecord const * first_failure() const;
};

/// Pseudorandom points with -5 <= Re s <= 6 and |Im s| <= 30, kept 0.05 away
/// from the real integers.
std::vector<Complex> fe_samples(std::size_t count, std::uint64_t seed);

/// Case names accepted by fe_check and uniqueness_case.
std::vector<std::string> fe_check_cases();
std::vector<std::string> uniqueness_cases();

/// Residual suite for one of zeta, xi, eta, counterexample, dedekind. The eta
/// case needs `zeros` and uses the first n_terms of them (0: all).
Report fe_check(std::string const & case_name, std::size_t samples, std::uint64_t seed,
                ZeroList const * zeros = nullptr, std::size_t n_terms = 0,
                EvalConfig const & cfg = {});

/// sharpness, order2 or limit0.
Report uniqueness_case(std::string const & case_name, EvalConfig const & cfg = {});

/// ZETA_CACHE_DIR, else $XDG_CACHE_HOME/zetaeta, else $HOME/.cache/zetaeta,
/// else ./.zetaeta-cache; the file is zeta-zeros.txt.
std::string default_zero_cache_path();

/// "%.17g" formatting used for every machine-readable number.
std::string format_number(double x);

} // namespace zetaeta

#endif
