#include "talc/algebra/numbers.hpp"

#include <stdexcept>

namespace talc {

Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_int: " + to_string(q) + " is not integral");
    return rat_numerator(q);
}

std::string to_string(const Rat& q) {
    if (is_integer(q)) return rat_numerator(q).str();
    return rat_numerator(q).str() + "/" + rat_denominator(q).str();
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is a running binomial
    }
    return r;
}

Rat pow_rat(const Rat& q, unsigned e) {
    Rat r = 1, b = q;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

}  // namespace talc
