#pragma once

#include "talc/combinat/permutation.hpp"
#include "talc/combinat/subexceedant.hpp"

namespace talc {

/// Inductive insertion bijection from subexceedant functions on [n] to
/// permutations of [n]. Processing i = 1..n:
///   - f(i) = i: prepend i;
///   - f(i) already an image value: append i at the end of the increasing
///     run starting at the letter f(i);
///   - otherwise: insert i immediately left of the letter f(i).
/// It carries leader data across: f(bl(f)) equals the run leaders of the
/// image, and |bl(f)| - 1 equals its descent count.
Permutation lambda_map(const SubexceedantFunction& f);

/// Inverse: recover f(i) from the position of i among the letters <= i.
SubexceedantFunction lambda_inverse(const Permutation& pi);

}  // namespace talc
