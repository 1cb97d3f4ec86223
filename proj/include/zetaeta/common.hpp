#ifndef ZETAETA_COMMON_HPP
#define ZETAETA_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetaeta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog4OverPi = 0.44127016314141608; // log(4)/pi

enum class ErrorCode {
    pole = 1,
    domain,
    consistency,
    completeness,
    format,
    validation,
    config,
    density,
    invalid_argument,
    io,
};

const char * error_code_name(ErrorCode code);

class Error : public std::runtime_error
{
    ErrorCode code_;

    public:

    Error(ErrorCode code, std::string const & what)
        : std::runtime_error(what), code_(code)
    {}

    ErrorCode code() const { return code_; }
};

/* One type per failure class so that callers can catch selectively. */
#define ZETAETA_DEFINE_ERROR(Name, code_value)                              \
    class Name : public Error                                               \
    {                                                                       \
        public:                                                             \
        explicit Name(std::string const & what) : Error(code_value, what) {} \
    };

ZETAETA_DEFINE_ERROR(PoleError, ErrorCode::pole)
ZETAETA_DEFINE_ERROR(DomainError, ErrorCode::domain)
ZETAETA_DEFINE_ERROR(ConsistencyError, ErrorCode::consistency)
ZETAETA_DEFINE_ERROR(CompletenessError, ErrorCode::completeness)
ZETAETA_DEFINE_ERROR(FormatError, ErrorCode::format)
ZETAETA_DEFINE_ERROR(ValidationError, ErrorCode::validation)
ZETAETA_DEFINE_ERROR(ConfigError, ErrorCode::config)
ZETAETA_DEFINE_ERROR(DensityError, ErrorCode::density)
ZETAETA_DEFINE_ERROR(InvalidArgument, ErrorCode::invalid_argument)
ZETAETA_DEFINE_ERROR(IoError, ErrorCode::io)

#undef ZETAETA_DEFINE_ERROR

/// Knobs for the Euler-Maclaurin evaluators.
///
/// `em_terms` is a lower bound on the summation cutoff; the evaluators raise
/// it to max(20, |Im s|/2 + 10). Bernoulli corrections run through
/// B_{bernoulli_order} and stop early once a correction term drops below
/// target_abs_error / 100.
struct EvalConfig
{
    int em_terms = 20;
    int bernoulli_order = 30;
    double target_abs_error = 1e-10;

    void validate() const;
};

/// Deterministic sample generator (splitmix64 seeding, xoshiro256** core).
/// Output is identical across platforms and standard libraries.
class SampleRng
{
    std::uint64_t state_[4];

    public:

    explicit SampleRng(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

} // namespace zetaeta

#endif
