#include "talc/recurrence/weight.hpp"

#include <sstream>

namespace talc {

std::string AffineForm::to_string(const std::string& nv, const std::string& kv) const {
    std::ostringstream os;
    bool wrote = false;
    auto emit = [&](const Rat& c, const std::string& var) {
        if (c == 0) return;
        if (wrote) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const Rat mag = c > 0 ? c : Rat(-c);
        if (mag != 1 || var.empty()) os << talc::to_string(mag);
        os << var;
        wrote = true;
    };
    emit(alpha, nv);
    emit(beta, kv);
    emit(gamma, "");
    if (!wrote) os << "0";
    return os.str();
}

Weight::Weight(std::optional<AffineForm> base, unsigned exponent, Fn fn, std::string desc)
    : base_(std::move(base)), exponent_(exponent), fn_(std::move(fn)),
      description_(std::move(desc)) {}

Weight Weight::affine_power(Rat alpha, Rat beta, Rat gamma, unsigned exponent) {
    AffineForm base{std::move(alpha), std::move(beta), std::move(gamma)};
    std::string desc = "(" + base.to_string() + ")";
    if (exponent != 1) desc += "^" + std::to_string(exponent);
    return Weight(base, exponent, nullptr, std::move(desc));
}

Weight Weight::tabulated(Fn fn, std::string description) {
    return Weight(std::nullopt, 1, std::move(fn), std::move(description));
}

Rat Weight::operator()(long n, long k) const {
    if (base_) return pow_rat((*base_)(n, k), exponent_);
    return fn_(n, k);
}

Rat Weight::base_value(long n, long k) const {
    if (base_) return (*base_)(n, k);
    return fn_(n, k);
}

const AffineForm* Weight::affine() const { return base_ ? &*base_ : nullptr; }

Weight Weight::lifted(unsigned l) const {
    if (base_) {
        Weight w = *this;
        w.exponent_ *= l;
        w.description_ = "(" + base_->to_string() + ")^" + std::to_string(w.exponent_);
        return w;
    }
    Fn inner = fn_;
    return tabulated([inner, l](long n, long k) { return pow_rat(inner(n, k), l); },
                     "(" + description_ + ")^" + std::to_string(l));
}

RecurrenceSpec power_lift(const RecurrenceSpec& spec, unsigned l) {
    RecurrenceSpec lifted = spec;
    lifted.weights.c = spec.weights.c.lifted(l);
    lifted.weights.d = spec.weights.d.lifted(l);
    if (l != 1) lifted.name = spec.name + "^" + std::to_string(l);
    return lifted;
}

}  // namespace talc
