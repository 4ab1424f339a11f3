#include "talc/algebra/gamma.hpp"

#include "talc/algebra/sequences.hpp"

namespace talc {

namespace {

// t^i (1+t)^{n-2i}
Polynomial basis_element(long i, long n) {
    Polynomial p = Polynomial::monomial(1, static_cast<std::size_t>(i));
    const Polynomial one_plus_t{1, 1};
    for (long j = 0; j < n - 2 * i; ++j) p = p * one_plus_t;
    return p;
}

}  // namespace

std::optional<GammaVector> gamma_expand(const Polynomial& p, long n) {
    if (n < p.degree()) return std::nullopt;
    if (!is_palindromic(p, n)) return std::nullopt;
    GammaVector g;
    g.center = n;
    Polynomial residual = p;
    for (long i = 0; 2 * i <= n; ++i) {
        const Rat gi = residual.coeff(static_cast<std::size_t>(i));
        g.gammas.push_back(gi);
        if (gi != 0) residual = residual - basis_element(i, n) * gi;
    }
    if (!residual.is_zero()) return std::nullopt;  // unreachable for palindromic input
    return g;
}

Polynomial gamma_reconstruct(const GammaVector& g) {
    Polynomial p;
    for (std::size_t i = 0; i < g.gammas.size(); ++i)
        if (g.gammas[i] != 0)
            p = p + basis_element(static_cast<long>(i), g.center) * g.gammas[i];
    return p;
}

}  // namespace talc
