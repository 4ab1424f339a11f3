#pragma once

#include <cstddef>
#include <vector>

#include "talc/paths/injection.hpp"
#include "talc/paths/path_word.hpp"

namespace talc {

/// One pair whose weight decreased under the injection.
struct PairViolation {
    PathWord p, q, p_prime, q_prime;
    Rat before, after;
};

/// Exhaustive report over P(k+1,n) x P(k-1,n): does
/// wt(p) wt(q) <= wt(p') wt(q') hold pairwise, and does the aggregate
/// row inequality T(n,k)^2 >= T(n,k+1) T(n,k-1) hold (as path sums)?
/// Violations are report content, not errors.
struct WeightMonotonicityReport {
    long n = 0, k = 0;
    std::size_t pair_count = 0;
    std::size_t violation_count = 0;
    std::vector<PairViolation> violations;  // capped at max_violations
    Rat sum_before;      // sum of wt(p) wt(q) over the off-diagonal pairs
    Rat sum_after;       // sum over P(k,n) x P(k,n), i.e. T(n,k)^2
    bool aggregate_holds = true;
    bool pairwise_holds() const { return violation_count == 0; }
};

WeightMonotonicityReport verify_weight_monotone(long k, long n, const WeightSpec& w,
                                                Cell anchor, unsigned jobs = 1,
                                                std::size_t max_violations = 16);

}  // namespace talc
