#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check. The real-root counter here never builds a Sturm chain: it isolates
// the critical points recursively, refines each isolating interval by exact
// rational bisection until the polynomial's interval image excludes zero,
// and counts sign changes across the certified sample points.

#include <cassert>
#include <optional>
#include <vector>

#include "talc/algebra/polynomial.hpp"
#include "talc/algebra/sturm.hpp"

namespace talc::testing {

// Rational interval arithmetic, just enough for Horner evaluation.
struct RInterval {
    Rat lo, hi;
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

inline RInterval operator+(const RInterval& a, const RInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RInterval operator*(const RInterval& a, const RInterval& b) {
    const Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RInterval eval_interval(const Polynomial& p, const RInterval& x) {
    RInterval acc{0, 0};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + RInterval{*it, *it};
    return acc;
}

// A root of a square-free polynomial: exact rational, or an open interval
// whose rational endpoints carry opposite nonzero signs.
struct IsolatedRoot {
    std::optional<Rat> exact;
    Rat lo, hi;
};

inline Rat cauchy_bound(const Polynomial& p) {
    Rat m = 0;
    for (const Rat& c : p.coeffs()) {
        const Rat a = c < 0 ? Rat(-c) : c;
        if (a > m) m = a;
    }
    const Rat lead = p.leading() < 0 ? Rat(-p.leading()) : p.leading();
    return 1 + m / lead;
}

// Distinct real roots of a square-free polynomial, sorted, as true brackets.
inline std::vector<IsolatedRoot> isolate_roots(const Polynomial& p) {
    assert(!p.is_zero());
    if (p.degree() <= 0) return {};
    if (p.degree() == 1) {
        const Rat root = -p.coeff(0) / p.coeff(1);
        return {{root, root, root}};
    }
    const Polynomial dp = square_free_part(p.derivative());
    const std::vector<IsolatedRoot> crit = isolate_roots(dp);

    // Certified sample per critical point c: a rational t with
    // sign(p(t)) = sign(p(c)) != 0 and no root of p between t and c.
    // Square-freeness of p guarantees p(c) != 0, so the refinement ends.
    struct Sample {
        Rat t;
        int s;
    };
    std::vector<Sample> samples;
    for (const auto& c : crit) {
        if (c.exact) {
            samples.push_back({*c.exact, sign(p(*c.exact))});
            continue;
        }
        Rat lo = c.lo, hi = c.hi;
        const int slo = sign(dp(lo));
        assert(slo != 0 && sign(dp(hi)) == -slo);
        for (;;) {
            const RInterval image = eval_interval(p, {lo, hi});
            if (!image.contains_zero()) {
                samples.push_back({lo, sign(image.lo)});
                break;
            }
            const Rat mid = (lo + hi) / 2;
            const int smid = sign(dp(mid));
            if (smid == 0) {  // the critical point is the rational midpoint
                samples.push_back({mid, sign(p(mid))});
                break;
            }
            (smid == slo ? lo : hi) = mid;
        }
        assert(samples.back().s != 0);
    }

    // Between consecutive samples p has no root near the refined critical
    // regions and is monotone in between, so each sign change is one root.
    Rat bound = cauchy_bound(p);
    for (const auto& s : samples) {
        const Rat a = s.t < 0 ? Rat(-s.t) : s.t;
        if (a + 1 > bound) bound = a + 1;
    }
    std::vector<Sample> nodes;
    nodes.push_back({-bound, sign(p(-bound))});
    nodes.insert(nodes.end(), samples.begin(), samples.end());
    nodes.push_back({bound, sign(p(bound))});

    std::vector<IsolatedRoot> roots;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        assert(nodes[i].s != 0 && nodes[i + 1].s != 0);
        if (nodes[i].s != nodes[i + 1].s)
            roots.push_back({std::nullopt, nodes[i].t, nodes[i + 1].t});
    }
    return roots;
}

/// Distinct real roots of any non-zero polynomial (x = 0 handled by
/// deflation, multiplicities by the square-free part).
inline int count_real_roots_oracle(const Polynomial& p) {
    assert(!p.is_zero());
    const std::size_t v = p.x_valuation();
    const Polynomial q = p.shift_down(v);
    int count = v > 0 ? 1 : 0;
    if (q.degree() >= 1) count += static_cast<int>(isolate_roots(square_free_part(q)).size());
    return count;
}

}  // namespace talc::testing
