#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace novk {

// Exact arbitrary-precision scalars. Everything in this library is integer
// or rational; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

} // namespace novk
