#ifndef SETMEANS_RAT_HPP
#define SETMEANS_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace setmeans {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }

inline Rat abs_of(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Largest integer <= r.
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
// std::invalid_argument on malformed input; decimals are rejected.
Rat parse_rat(const std::string& text);

// "p/q" (or just "p" when q == 1).
std::string rat_to_string(const Rat& r);

// Decimal rendering with the given number of significant digits,
// round-to-nearest. Used only for display, never for computation.
std::string rat_to_decimal(const Rat& r, int significant_digits = 12);

Rat pow_rat(const Rat& base, long exp);

}  // namespace setmeans

#endif
