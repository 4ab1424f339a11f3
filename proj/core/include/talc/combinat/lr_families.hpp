#pragma once

#include <vector>

#include "talc/algebra/numbers.hpp"
#include "talc/combinat/census.hpp"

namespace talc {

// Brute-force counts for the two-parameter generalized families: l-tuples
// of structures sharing one leader set that contains {1..r}. Each is the
// independent oracle for the matching catalog recurrence
// ("lr-eulerian" / "lr-stirling2" / "lr-stirling1" / "lr-lah").

/// l-tuples of subexceedant functions with common block-leader set of size
/// k+1 containing [r].
Int lr_eulerian_bruteforce(int n, int k, unsigned l, unsigned r);

/// l-tuples of set partitions into k blocks, common block-minima set
/// containing [r]. (Equivalently: 1..r lie in different blocks.)
Int lr_stirling2_bruteforce(int n, int k, unsigned l, unsigned r);

/// l-tuples of permutations with k cycles, common cycle-leader set
/// containing [r].
Int lr_stirling1_bruteforce(int n, int k, unsigned l, unsigned r);

/// l-tuples of partitions into k linearly ordered blocks, common
/// block-minima set containing [r].
Int lr_lah_bruteforce(int n, int k, unsigned l, unsigned r);

/// r-Stirling number of the second kind: brute force at desk scale,
/// recurrence above it.
Int r_stirling2(int n, int k, unsigned r);

/// Row n of the (l,r)-Eulerian array by its recurrence
/// A(n,k) = (n-k)^l A(n-1,k-1) + (k+1)^l A(n-1,k), anchored A(r,r-1) = 1;
/// entries for k = r-1 .. n-1.
std::vector<Int> lr_eulerian_row(int n, unsigned l, unsigned r);

Int lr_eulerian_recurrence(int n, int k, unsigned l, unsigned r);

}  // namespace talc
