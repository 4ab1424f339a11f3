#include "talc/combinat/census.hpp"

#include <bit>

#include "talc/combinat/permutation.hpp"
#include "talc/combinat/subexceedant.hpp"
#include "talc/errors.hpp"

namespace talc {

namespace {

void check_bound(int n, int bound, const char* what) {
    if (n < 0 || n > bound)
        throw too_large_error(std::string(what) + ": n = " + std::to_string(n) +
                              " exceeds the enumeration bound " + std::to_string(bound));
}

Int int_pow(const Int& base, unsigned e) {
    Int r = 1, b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// Visits every set partition of [n] as (minima mask, block sizes).
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    std::vector<std::uint32_t> block_masks;
    std::vector<int> block_sizes;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            std::uint32_t minima = 0;
            for (std::uint32_t m : block_masks) minima |= m & (~m + 1);  // lowest set bit
            fn(minima, block_sizes);
            return;
        }
        const std::uint32_t bit = 1u << (i - 1);
        for (std::size_t b = 0; b < block_masks.size(); ++b) {
            block_masks[b] |= bit;
            ++block_sizes[b];
            self(self, i + 1);
            --block_sizes[b];
            block_masks[b] &= ~bit;
        }
        block_masks.push_back(bit);
        block_sizes.push_back(1);
        self(self, i + 1);
        block_masks.pop_back();
        block_sizes.pop_back();
    };
    rec(rec, 1);
}

}  // namespace

Int LeaderCensus::total() const {
    Int t = 0;
    for (const auto& [mask, count] : counts) t += count;
    return t;
}

Int LeaderCensus::tuple_count(int size, unsigned l, unsigned r) const {
    const std::uint32_t required = (r == 0) ? 0 : ((1u << r) - 1);
    Int acc = 0;
    for (const auto& [mask, count] : counts) {
        if (std::popcount(mask) != size) continue;
        if ((mask & required) != required) continue;
        acc += int_pow(count, l);
    }
    return acc;
}

LeaderCensus leader_census(int n, int bound) {
    check_bound(n, bound, "leader_census");
    LeaderCensus census;
    census.n = n;
    for_each_subexceedant(n, [&](const SubexceedantFunction& f) {
        census.counts[leaders_mask(f.block_leaders())] += 1;
    });
    return census;
}

LeaderCensus partition_census(int n, int bound) {
    check_bound(n, bound, "partition_census");
    LeaderCensus census;
    census.n = n;
    for_each_partition(n, [&](std::uint32_t minima, const std::vector<int>&) {
        census.counts[minima] += 1;
    });
    return census;
}

LeaderCensus ordered_partition_census(int n, int bound) {
    check_bound(n, bound, "ordered_partition_census");
    LeaderCensus census;
    census.n = n;
    for_each_partition(n, [&](std::uint32_t minima, const std::vector<int>& sizes) {
        Int orders = 1;
        for (int s : sizes) orders *= factorial(static_cast<unsigned>(s));
        census.counts[minima] += orders;
    });
    return census;
}

LeaderCensus cycle_census(int n, int bound) {
    check_bound(n, bound, "cycle_census");
    LeaderCensus census;
    census.n = n;
    for_each_permutation(n, [&](const Permutation& pi) {
        census.counts[leaders_mask(pi.cycle_leaders())] += 1;
    });
    return census;
}

}  // namespace talc
