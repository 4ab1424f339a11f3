#include "talc/algebra/sequences.hpp"

#include <cassert>

namespace talc {

bool is_log_concave(std::span<const Rat> seq) {
    assert(!seq.empty());
    for (std::size_t k = 1; k + 1 < seq.size(); ++k)
        if (seq[k] * seq[k] < seq[k + 1] * seq[k - 1]) return false;
    return true;
}

bool is_unimodal(std::span<const Rat> seq) {
    assert(!seq.empty());
    std::size_t i = 1;
    while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
    while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
    return i == seq.size();
}

bool is_palindromic(const Polynomial& p, long center_degree) {
    assert(center_degree >= p.degree());
    for (long k = 0; 2 * k <= center_degree; ++k)
        if (p.coeff(static_cast<std::size_t>(k)) !=
            p.coeff(static_cast<std::size_t>(center_degree - k)))
            return false;
    return true;
}

}  // namespace talc
