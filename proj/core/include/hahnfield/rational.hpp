#ifndef HAHNFIELD_RATIONAL_HPP
#define HAHNFIELD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hahnfield {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// "num/den", or just "num" when the denominator is 1.
std::string rat_to_string(const Rat& q);

// Floor of a rational to an integer.
Int rat_floor(const Rat& q);

// gcd of two non-negative rationals: gcd(a/b, c/d) over the common denominator.
Rat rat_gcd(const Rat& a, const Rat& b);

// True when den divides p^max_depth, i.e. den = p^k with k <= max_depth.
bool denominator_is_p_power(const Rat& q, unsigned p, unsigned max_depth);

} // namespace hahnfield

#endif
