#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kschur {

/// Exact coefficient type. All counts and expansion coefficients use it.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace kschur
