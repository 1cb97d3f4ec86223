#ifndef ZETAETA_TEST_SUPPORT_HPP
#define ZETAETA_TEST_SUPPORT_HPP

#include <complex>
#include <cstddef>
#include <map>

#include "doctest.h"
#include "zetaeta/zero_finder.hpp"

namespace test {

using zetaeta::Complex;

inline double rel_err(Complex got, Complex want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double pure_rel_err(Complex got, Complex want)
{
    return std::abs(got - want) / std::abs(want);
}

// Zero lists are expensive enough to share between test cases.
inline zetaeta::ZeroList const & first_zeros(std::size_t n)
{
    static std::map<std::size_t, zetaeta::ZeroList> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, zetaeta::find_first_zeros(n)).first;
    return it->second;
}

} // namespace test

#endif
