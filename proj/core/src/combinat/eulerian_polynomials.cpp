#include "talc/combinat/eulerian_polynomials.hpp"

#include <cassert>

namespace talc {

namespace {

BivariatePolynomial general_step(const BivariatePolynomial& p, unsigned l) {
    const BivariatePolynomial st = p.shifted(1, 1);
    return theta_power(st, Var::s, l).shifted(-1, 0) +
           theta_power(st, Var::t, l).shifted(0, -1);
}

BivariatePolynomial expanded_l2_step(const BivariatePolynomial& p) {
    const BivariatePolynomial s = BivariatePolynomial::monomial(1, 1, 0);
    const BivariatePolynomial t = BivariatePolynomial::monomial(1, 0, 1);
    const BivariatePolynomial st = s * t;
    return (s + t) * p + st * (p.d(Var::s) + p.d(Var::t)) * Rat(3) +
           st * (s * p.d(Var::s).d(Var::s) + t * p.d(Var::t).d(Var::t));
}

}  // namespace

BivariatePolynomial eulerian_bivariate(int n, unsigned l) {
    assert(n >= 0);
    BivariatePolynomial p = BivariatePolynomial::constant(1);
    for (int i = 1; i < n; ++i) p = general_step(p, l);
    return p;
}

std::vector<Int> eulerian_power_row(int n, unsigned l) {
    assert(n >= 1);
    // A(n,k) = (k+1)^l A(n-1,k) + (n-k)^l A(n-1,k-1), A(1,0) = 1
    std::vector<Int> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<Int> next(static_cast<std::size_t>(m), 0);
        for (int k = 0; k < m; ++k) {
            Int v = 0;
            if (k < m - 1) v += to_int(pow_rat(Rat(k + 1), l)) * row[static_cast<std::size_t>(k)];
            if (k >= 1) v += to_int(pow_rat(Rat(m - k), l)) * row[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    return row;
}

Polynomial eulerian_power_polynomial(int n, unsigned l) {
    std::vector<Rat> coeffs;
    for (const Int& v : eulerian_power_row(n, l)) coeffs.emplace_back(v);
    return Polynomial(std::move(coeffs));
}

bool l2_expanded_step_matches(int iterations) {
    BivariatePolynomial general = BivariatePolynomial::constant(1);
    BivariatePolynomial expanded = BivariatePolynomial::constant(1);
    for (int i = 0; i < iterations; ++i) {
        general = general_step(general, 2);
        expanded = expanded_l2_step(expanded);
        if (general != expanded) return false;
    }
    return true;
}

}  // namespace talc
