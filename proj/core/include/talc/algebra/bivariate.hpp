#pragma once

#include <map>
#include <string>
#include <utility>

#include "talc/algebra/numbers.hpp"
#include "talc/algebra/polynomial.hpp"

namespace talc {

enum class Var { s, t };

/// Sparse bivariate polynomial in s, t with exact rational coefficients.
/// No zero coefficients are stored. Keys are (deg_s, deg_t).
class BivariatePolynomial {
  public:
    using Key = std::pair<long, long>;

    BivariatePolynomial() = default;
    static BivariatePolynomial constant(const Rat& c);
    static BivariatePolynomial monomial(const Rat& c, long ds, long dt);

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(long ds, long dt) const;

    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const Rat& c) const;
    bool operator==(const BivariatePolynomial& o) const = default;

    /// Multiply by s^ds t^dt; negative shifts require divisibility.
    BivariatePolynomial shifted(long ds, long dt) const;

    /// Plain partial derivative in the given variable.
    BivariatePolynomial d(Var v) const;

    BivariatePolynomial swap_vars() const;
    bool symmetric() const { return *this == swap_vars(); }

    /// Substitute t = 1, keeping s as the polynomial variable.
    Polynomial at_t1() const;

    std::string to_string() const;

  private:
    void add_term(const Key& k, const Rat& c);
    std::map<Key, Rat> terms_;
};

/// l-th power of the Euler operator v d/dv: scales each monomial s^a t^b by
/// a^l (for v = s) or b^l (for v = t). theta_power(p, v, 0) is the identity.
BivariatePolynomial theta_power(const BivariatePolynomial& p, Var v, unsigned l);

}  // namespace talc
