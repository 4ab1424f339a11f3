#include "talc/algebra/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace talc {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rat& c, std::size_t d) {
    if (c == 0) return {};
    std::vector<Rat> cs(d + 1, Rat(0));
    cs[d] = c;
    return Polynomial(std::move(cs));
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rat> cs = coeffs_;
    for (auto& c : cs) c = -c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> cs(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator*(const Rat& c) const {
    std::vector<Rat> cs = coeffs_;
    for (auto& x : cs) x *= c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Polynomial(std::move(cs));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    Polynomial r = *this;
    std::vector<Rat> q(degree() >= divisor.degree() ? coeffs_.size() - divisor.coeffs_.size() + 1 : 0,
                       Rat(0));
    const Rat inv_lead = Rat(1) / divisor.leading();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - divisor.degree());
        const Rat factor = r.leading() * inv_lead;
        q[shift] = factor;
        r = r - divisor * Polynomial::monomial(factor, shift);
    }
    return {Polynomial(std::move(q)), std::move(r)};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rat(1) / a.leading());  // monic normal form
    return a;
}

std::size_t Polynomial::x_valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return 0;
}

Polynomial Polynomial::shift_down(std::size_t v) const {
    if (v == 0) return *this;
    assert(x_valuation() >= v);
    return Polynomial(std::vector<Rat>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        const Rat mag = coeffs_[i] > 0 ? coeffs_[i] : Rat(-coeffs_[i]);
        if (mag != 1 || i == 0) os << talc::to_string(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace talc
