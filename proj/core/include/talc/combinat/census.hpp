#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "talc/algebra/numbers.hpp"

namespace talc {

/// Counts of combinatorial objects grouped by their leader set (bit i-1 of
/// the key = element i of [n]). Tuple counts with equal leader sets then
/// need no tuple materialization: an l-tuple count is sum over sets of
/// count^l.
struct LeaderCensus {
    int n = 0;
    std::map<std::uint32_t, Int> counts;  // ordered keys keep reports deterministic

    Int total() const;

    /// Sum of count(B)^l over sets B containing {1..r} with |B| = size.
    Int tuple_count(int size, unsigned l, unsigned r) const;
};

inline constexpr int kCensusDeskBound = 9;

/// Census of all n! subexceedant functions by block-leader set.
/// Throws too_large_error above the bound (flag-overridable).
LeaderCensus leader_census(int n, int bound = kCensusDeskBound);

/// Census of set partitions of [n] by block minima.
LeaderCensus partition_census(int n, int bound = kCensusDeskBound);

/// Census of partitions of [n] into linearly ordered blocks by block minima
/// (each set partition weighted by the product of block-size factorials).
LeaderCensus ordered_partition_census(int n, int bound = kCensusDeskBound);

/// Census of permutations of [n] by cycle-leader set.
LeaderCensus cycle_census(int n, int bound = kCensusDeskBound);

}  // namespace talc
