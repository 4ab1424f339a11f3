#include "talc/paths/injection.hpp"

#include <set>

#include "talc/errors.hpp"

namespace talc {

InjectionResult inject(const PathWord& p, const PathWord& q) {
    if (p.start() != q.start())
        throw bad_endpoints_error("paths must share their start cell");
    const Cell pe = p.end(), qe = q.end();
    if (pe.n != qe.n || pe.k != qe.k + 2)
        throw bad_endpoints_error("expected endpoints (k+1,n) and (k-1,n), got " +
                                  pe.to_string() + " and " + qe.to_string());
    const std::string& ps = p.steps();
    const std::string& qs = q.steps();
    const std::size_t len = ps.size();
    // Largest prefix length i with #C(p[1..i]) - #C(q[1..i]) = 1: swapping
    // the suffixes there rebalances both words onto column k. Existence for
    // i >= 1 follows from the discrete intermediate value theorem (the
    // difference starts at 0, ends at 2, moves by at most 1 per step).
    std::vector<long> diff(len + 1, 0);
    for (std::size_t i = 1; i <= len; ++i)
        diff[i] = diff[i - 1] + (ps[i - 1] == 'C') - (qs[i - 1] == 'C');
    std::size_t split = 0;
    for (std::size_t i = len; i >= 1; --i) {
        if (diff[i] == 1) {
            split = i;
            break;
        }
    }
    if (split == 0) throw bad_endpoints_error("no valid split index");  // unreachable
    InjectionResult r;
    r.split_index = split;
    r.p_prime = PathWord(p.start(), ps.substr(0, split) + qs.substr(split));
    r.q_prime = PathWord(q.start(), qs.substr(0, split) + ps.substr(split));
    return r;
}

bool shift_property_holds(const PathWord& p, const PathWord& q, const InjectionResult& r) {
    const std::size_t i = r.split_index;
    for (std::size_t j = i + 1; j <= p.length(); ++j) {
        // steps of q after the split start one column right inside q',
        // steps of p one column left inside p'
        const Cell q_start = q.cell_after(j - 1);
        const Cell q_in_p = r.p_prime.cell_after(j - 1);
        if (q_in_p.k != q_start.k + 1 || q_in_p.n != q_start.n) return false;
        const Cell p_start = p.cell_after(j - 1);
        const Cell p_in_q = r.q_prime.cell_after(j - 1);
        if (p_in_q.k != p_start.k - 1 || p_in_q.n != p_start.n) return false;
    }
    return true;
}

InjectionSweep injection_sweep(long n, long k, Cell anchor) {
    InjectionSweep sweep;
    sweep.n = n;
    sweep.k = k;
    const auto ps = enumerate_paths(anchor, Cell{k + 1, n});
    const auto qs = enumerate_paths(anchor, Cell{k - 1, n});
    std::set<std::pair<std::string, std::string>> images;
    for (const auto& p : ps) {
        for (const auto& q : qs) {
            ++sweep.pair_count;
            const InjectionResult r = inject(p, q);
            const Cell target{k, n};
            if (r.p_prime.end() != target || r.q_prime.end() != target) sweep.endpoints_ok = false;
            if (!shift_property_holds(p, q, r)) sweep.shift_ok = false;
            images.emplace(r.p_prime.steps(), r.q_prime.steps());
        }
    }
    sweep.distinct_images = images.size();
    return sweep;
}

}  // namespace talc
