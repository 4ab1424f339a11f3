#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "talc/algebra/numbers.hpp"

namespace talc {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[i] is the coefficient of x^i; trailing zeros are trimmed, the
/// zero polynomial has an empty coefficient list. Immutable value type.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rat> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<Rat> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial constant(const Rat& c) { return Polynomial({c}); }
    /// c * x^d
    static Polynomial monomial(const Rat& c, std::size_t d);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    Rat operator()(const Rat& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const = default;

    Polynomial derivative() const;

    /// Quotient and remainder over the rationals; divisor must be non-zero.
    struct DivMod;
    DivMod divmod(const Polynomial& divisor) const;

    /// Monic gcd over the rationals; gcd(0,0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// Largest v with x^v dividing the polynomial (0 for the zero polynomial).
    std::size_t x_valuation() const;
    /// Divide out x^v.
    Polynomial shift_down(std::size_t v) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient, remainder;
};

}  // namespace talc
