#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "qmat/error.hpp"

namespace qmat {

using Rational = boost::rational<long long>;

// Parses either "n", "n/d" or a decimal string "12.75" into an exact rational.
Rational parse_rational(const std::string& text);

// Integer values print without a denominator, everything else as "n/d".
std::string rational_to_string(const Rational& value);

}  // namespace qmat
