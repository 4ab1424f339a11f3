#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "talc/algebra/numbers.hpp"

namespace talc {

/// alpha*n + beta*k + gamma
struct AffineForm {
    Rat alpha, beta, gamma;
    Rat operator()(long n, long k) const { return alpha * n + beta * k + gamma; }
    std::string to_string(const std::string& nv = "n", const std::string& kv = "k") const;
};

/// One recurrence coefficient: either (alpha n + beta k + gamma)^exponent or
/// an arbitrary tabulated function of (n, k). Weights are evaluated lazily
/// per cell; nothing is materialized.
class Weight {
  public:
    using Fn = std::function<Rat(long, long)>;

    Weight() : Weight(affine_power(0, 0, 1, 1)) {}

    static Weight affine_power(Rat alpha, Rat beta, Rat gamma, unsigned exponent);
    static Weight tabulated(Fn fn, std::string description);

    Rat operator()(long n, long k) const;

    /// The affine base value for affine-power weights, the value itself for
    /// tabulated ones. Condition checkers treat a negative base as "outside
    /// the region where the sufficient-condition hypotheses make sense".
    Rat base_value(long n, long k) const;

    /// Affine structure if this is an affine-power weight.
    const AffineForm* affine() const;
    unsigned exponent() const { return exponent_; }

    /// Replace w by w^l (exponents compose for affine powers).
    Weight lifted(unsigned l) const;

    const std::string& description() const { return description_; }

  private:
    Weight(std::optional<AffineForm> base, unsigned exponent, Fn fn, std::string desc);
    std::optional<AffineForm> base_;
    unsigned exponent_ = 1;
    Fn fn_;  // set only for tabulated weights
    std::string description_;
};

/// The pair of coefficients of the two-term row recurrence
/// T(n,k) = c(n,k) T(n-1,k) + d(n,k) T(n-1,k-1).
/// An N step ending at (k,n) carries c(n,k); a C step d(n,k).
struct WeightSpec {
    Weight c, d;
    std::string description;
};

/// Weights plus the anchor cell (n0,k0) with T(n0,k0) = 1 and T = 0 outside
/// n >= n0, k0 <= k <= k0 + (n - n0).
struct RecurrenceSpec {
    WeightSpec weights;
    long anchor_n = 0;
    long anchor_k = 0;
    std::string name;

    bool in_triangle(long n, long k) const {
        return n >= anchor_n && k >= anchor_k && k <= anchor_k + (n - anchor_n);
    }
};

/// The spec with c, d replaced by c^l, d^l (l >= 1).
RecurrenceSpec power_lift(const RecurrenceSpec& spec, unsigned l);

}  // namespace talc
