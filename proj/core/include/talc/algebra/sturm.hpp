#pragma once

#include <vector>

#include "talc/algebra/polynomial.hpp"

namespace talc {

/// Signed-remainder chain p, p', -rem(...), ... ending before the zero
/// polynomial. Input must be non-zero.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// p with repeated factors reduced to multiplicity one: p / gcd(p, p').
Polynomial square_free_part(const Polynomial& p);

/// Number of distinct real roots, exact, via a Sturm chain on the
/// square-free part (an x-power factor contributes the root 0 once).
/// Throws zero_polynomial_error on the zero polynomial.
int count_real_roots(const Polynomial& p);

/// True iff every complex root is real, i.e. the root count with
/// multiplicity reaches the degree. Repeated real roots are fine; constants
/// are vacuously real-rooted.
bool is_real_rooted(const Polynomial& p);

}  // namespace talc
