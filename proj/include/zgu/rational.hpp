#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zgu {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Exact conversion; caller must know the value fits.
long long to_long(const Int& v);
long long to_long(const Rat& q);

}  // namespace zgu
