#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mf {

// Exact arithmetic everywhere: weights and hull pivots are rationals,
// polynomial coefficients and rank pivots are arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace mf
