#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace talc {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the contract the rest of the library assumes.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_denominator(q) == 1; }

/// Exact conversion; the caller guarantees q is integral.
Int to_int(const Rat& q);

/// Decimal rendering: plain integer string when integral, "p/q" otherwise.
std::string to_string(const Rat& q);

Int factorial(unsigned n);
Int binomial(long n, long k);

/// q^e for e >= 0 (0^0 = 1).
Rat pow_rat(const Rat& q, unsigned e);

inline int sign(const Rat& q) { return q.sign(); }

}  // namespace talc
