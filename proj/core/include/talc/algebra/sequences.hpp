#pragma once

#include <span>

#include "talc/algebra/numbers.hpp"
#include "talc/algebra/polynomial.hpp"

namespace talc {

/// a_k^2 >= a_{k+1} a_{k-1} for every interior index. Sequences must be
/// non-empty; singletons and pairs are log-concave by convention.
bool is_log_concave(std::span<const Rat> seq);

/// Weakly rises then weakly falls.
bool is_unimodal(std::span<const Rat> seq);

/// coeff_k == coeff_{center_degree - k} for all k, reading absent
/// coefficients as zero. Requires center_degree >= degree(p); the zero
/// polynomial is palindromic about any center.
bool is_palindromic(const Polynomial& p, long center_degree);

}  // namespace talc
