#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace molirr {

// Compare against Rational(x), never a bare integer: with Boost 1.74 in C++20
// mode `r == 0` picks the reversed operator and recurses forever.
using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);

// "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace molirr
