#pragma once

#include <vector>

#include "talc/algebra/bivariate.hpp"
#include "talc/algebra/polynomial.hpp"

namespace talc {

/// Homogeneous generating polynomial of row n of the power-l Eulerian
/// family (r = 1): sum_k A(n,k) s^k t^{n-1-k}, built by iterating
///     P -> (1/s) theta_s^l (s t P) + (1/t) theta_t^l (s t P)
/// n-1 times from the seed 1. Symmetric in s and t, which is how the
/// univariate rows are seen to be palindromic. n = 0 returns 1.
BivariatePolynomial eulerian_bivariate(int n, unsigned l);

/// Coefficient row A(n,k), k = 0..n-1, from the recurrence
/// A(n,k) = (k+1)^l A(n-1,k) + (n-k)^l A(n-1,k-1), A(1,0) = 1.
std::vector<Int> eulerian_power_row(int n, unsigned l);

/// The row as a polynomial in t.
Polynomial eulerian_power_polynomial(int n, unsigned l);

/// For l = 2 the iteration step expands to
///   (s+t) P + 3 s t (d/ds + d/dt) P + s t (s d2/ds2 + t d2/dt2) P.
/// True iff the expanded form agrees with the general step exactly through
/// `iterations` applications from the seed 1.
bool l2_expanded_step_matches(int iterations);

}  // namespace talc
