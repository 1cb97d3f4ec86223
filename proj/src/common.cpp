#include "zetaeta/common.hpp"

namespace zetaeta {

const char * error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::pole: return "PoleError";
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::consistency: return "ConsistencyError";
    case ErrorCode::completeness: return "CompletenessError";
    case ErrorCode::format: return "FormatError";
    case ErrorCode::validation: return "ValidationError";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::density: return "DensityError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io: return "IoError";
    }
    return "UnknownError";
}

void EvalConfig::validate() const
{
    if (em_terms <= 0)
        throw ConfigError("em_terms must be positive");
    if (bernoulli_order <= 0 || bernoulli_order % 2 != 0 || bernoulli_order > 30)
        throw ConfigError("bernoulli_order must be a positive even integer <= 30");
    if (!(target_abs_error > 0))
        throw ConfigError("target_abs_error must be > 0");
}

namespace {

std::uint64_t splitmix64(std::uint64_t & x)
{
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

} // namespace

SampleRng::SampleRng(std::uint64_t seed)
{
    for (auto & s : state_)
        s = splitmix64(seed);
}

std::uint64_t SampleRng::next()
{
    std::uint64_t const result = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t const t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double SampleRng::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

} // namespace zetaeta
