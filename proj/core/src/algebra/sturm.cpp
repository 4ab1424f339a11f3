#include "talc/algebra/sturm.hpp"

#include "talc/errors.hpp"

namespace talc {

namespace {

// Sign variation count in the chain, evaluating "at -inf / +inf" through
// leading coefficients: at +inf the sign is sign(leading); at -inf it flips
// with odd degree.
int variations_at_infinity(const std::vector<Polynomial>& chain, bool positive) {
    int variations = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(p.leading());
        if (!positive && (p.degree() % 2 != 0)) s = -s;
        if (s != 0) {
            if (prev != 0 && s != prev) ++variations;
            prev = s;
        }
    }
    return variations;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error{};
    std::vector<Polynomial> chain{p};
    Polynomial d = p.derivative();
    while (!d.is_zero()) {
        chain.push_back(d);
        Polynomial r = chain[chain.size() - 2].divmod(d).remainder;
        d = -r;
    }
    return chain;
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error{};
    if (p.degree() == 0) return p;
    const Polynomial g = Polynomial::gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return p.divmod(g).quotient;
}

int count_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error{};
    const std::size_t v = p.x_valuation();
    const Polynomial q = p.shift_down(v);
    int count = v > 0 ? 1 : 0;  // x = 0, counted once
    if (q.degree() >= 1) {
        const auto chain = sturm_sequence(square_free_part(q));
        count += variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
    }
    return count;
}

bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error{};
    const Polynomial q = p.shift_down(p.x_valuation());
    if (q.degree() <= 0) return true;
    // Complex roots survive into the square-free part, so all roots of p
    // are real iff the square-free part has as many distinct real roots as
    // its degree.
    const Polynomial sf = square_free_part(q);
    const auto chain = sturm_sequence(sf);
    const int distinct = variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
    return distinct == sf.degree();
}

}  // namespace talc
