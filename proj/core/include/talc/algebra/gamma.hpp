#pragma once

#include <optional>
#include <vector>

#include "talc/algebra/polynomial.hpp"

namespace talc {

/// Expansion of a palindromic polynomial in the basis t^i (1+t)^{n-2i},
/// i = 0..floor(n/2), where n is the declared center degree (the polynomial
/// is symmetric about n/2). Reconstruction is exact.
struct GammaVector {
    std::vector<Rat> gammas;
    long center = 0;  // the degree bound n; center of symmetry is n/2
};

/// Peels coefficients top-down (the basis is triangular in the monomial
/// basis, so the expansion is unique). Returns nullopt when p is not
/// palindromic about n/2, i.e. when no exact expansion exists.
std::optional<GammaVector> gamma_expand(const Polynomial& p, long n);

/// Sum of gammas[i] * t^i (1+t)^{n-2i}.
Polynomial gamma_reconstruct(const GammaVector& g);

}  // namespace talc
