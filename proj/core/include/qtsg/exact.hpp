#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtsg {

using ExactInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

}  // namespace qtsg
