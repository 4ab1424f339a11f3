#pragma once

#include <vector>

#include "talc/paths/path_word.hpp"

namespace talc {

/// Result of the suffix-swap injection on a pair of same-row paths ending
/// two columns apart: p ends at (k+1, n), q at (k-1, n); both images end at
/// (k, n). split_index is the largest prefix length i (1-based step count)
/// at which swapping suffixes balances the C-step counts; the map is
/// injective because the index is maximal.
struct InjectionResult {
    PathWord p_prime, q_prime;
    std::size_t split_index = 0;
};

/// Throws bad_endpoints_error unless p and q share their start cell and end
/// in the same row with p exactly two columns right of q.
InjectionResult inject(const PathWord& p, const PathWord& q);

/// Exhaustive check of the injection over the full pair space
/// P(k+1,n) x P(k-1,n) from a common anchor.
struct InjectionSweep {
    long n = 0, k = 0;
    std::size_t pair_count = 0;
    std::size_t distinct_images = 0;   // == pair_count iff injective
    bool endpoints_ok = true;          // images land in P(k,n) x P(k,n)
    bool shift_ok = true;              // steps after the split move by one column
    bool injective() const { return distinct_images == pair_count; }
};

InjectionSweep injection_sweep(long n, long k, Cell anchor);

/// Start columns of each step, used by the shift check: a step of q strictly
/// after the split starts one column further right inside q', and a step of
/// p one column further left inside p'.
bool shift_property_holds(const PathWord& p, const PathWord& q,
                          const InjectionResult& r);

}  // namespace talc
