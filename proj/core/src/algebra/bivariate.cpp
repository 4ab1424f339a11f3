#include "talc/algebra/bivariate.hpp"

#include <cassert>
#include <sstream>

namespace talc {

void BivariatePolynomial::add_term(const Key& k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePolynomial BivariatePolynomial::constant(const Rat& c) { return monomial(c, 0, 0); }

BivariatePolynomial BivariatePolynomial::monomial(const Rat& c, long ds, long dt) {
    BivariatePolynomial p;
    p.add_term({ds, dt}, c);
    return p;
}

Rat BivariatePolynomial::coeff(long ds, long dt) const {
    auto it = terms_.find({ds, dt});
    return it == terms_.end() ? Rat(0) : it->second;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    BivariatePolynomial r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const Rat& c) const {
    BivariatePolynomial r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

BivariatePolynomial BivariatePolynomial::shifted(long ds, long dt) const {
    BivariatePolynomial r;
    for (const auto& [k, v] : terms_) {
        assert(k.first + ds >= 0 && k.second + dt >= 0);
        r.add_term({k.first + ds, k.second + dt}, v);
    }
    return r;
}

BivariatePolynomial BivariatePolynomial::d(Var v) const {
    BivariatePolynomial r;
    for (const auto& [k, c] : terms_) {
        if (v == Var::s && k.first > 0) r.add_term({k.first - 1, k.second}, c * Rat(k.first));
        if (v == Var::t && k.second > 0) r.add_term({k.first, k.second - 1}, c * Rat(k.second));
    }
    return r;
}

BivariatePolynomial BivariatePolynomial::swap_vars() const {
    BivariatePolynomial r;
    for (const auto& [k, c] : terms_) r.add_term({k.second, k.first}, c);
    return r;
}

Polynomial BivariatePolynomial::at_t1() const {
    std::vector<Rat> cs;
    for (const auto& [k, c] : terms_) {
        const std::size_t d = static_cast<std::size_t>(k.first);
        if (cs.size() <= d) cs.resize(d + 1, Rat(0));
        cs[d] += c;
    }
    return Polynomial(std::move(cs));
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const Rat mag = c > 0 ? c : Rat(-c);
        const bool unit = (mag == 1) && (k.first > 0 || k.second > 0);
        if (!unit) os << talc::to_string(mag);
        if (k.first > 0) {
            if (!unit) os << "*";
            os << "s";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (k.first > 0 || !unit) os << "*";
            os << "t";
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

BivariatePolynomial theta_power(const BivariatePolynomial& p, Var v, unsigned l) {
    if (l == 0) return p;
    BivariatePolynomial r;
    for (const auto& [k, c] : p.terms()) {
        const long deg = (v == Var::s) ? k.first : k.second;
        Rat scale = pow_rat(Rat(deg), l);
        if (scale != 0) {
            BivariatePolynomial term = BivariatePolynomial::monomial(c * scale, k.first, k.second);
            r = r + term;
        }
    }
    return r;
}

}  // namespace talc
