#include "talc/combinat/lr_families.hpp"

#include <map>

#include "talc/recurrence/array.hpp"
#include "talc/recurrence/catalog.hpp"

namespace talc {

namespace {

// Censuses are cheap to rebuild at desk scale but the sweeps hit the same n
// repeatedly; one tiny cache per kind keeps them honest and fast.
const LeaderCensus& cached(std::map<int, LeaderCensus>& cache, int n,
                           LeaderCensus (*builder)(int, int)) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, builder(n, kCensusDeskBound)).first;
    return it->second;
}

std::map<int, LeaderCensus>& function_cache() {
    static std::map<int, LeaderCensus> cache;
    return cache;
}
std::map<int, LeaderCensus>& partition_cache() {
    static std::map<int, LeaderCensus> cache;
    return cache;
}
std::map<int, LeaderCensus>& ordered_cache() {
    static std::map<int, LeaderCensus> cache;
    return cache;
}
std::map<int, LeaderCensus>& cycle_cache() {
    static std::map<int, LeaderCensus> cache;
    return cache;
}

}  // namespace

Int lr_eulerian_bruteforce(int n, int k, unsigned l, unsigned r) {
    return cached(function_cache(), n, &leader_census).tuple_count(k + 1, l, r);
}

Int lr_stirling2_bruteforce(int n, int k, unsigned l, unsigned r) {
    return cached(partition_cache(), n, &partition_census).tuple_count(k, l, r);
}

Int lr_stirling1_bruteforce(int n, int k, unsigned l, unsigned r) {
    return cached(cycle_cache(), n, &cycle_census).tuple_count(k, l, r);
}

Int lr_lah_bruteforce(int n, int k, unsigned l, unsigned r) {
    return cached(ordered_cache(), n, &ordered_partition_census).tuple_count(k, l, r);
}

Int r_stirling2(int n, int k, unsigned r) {
    if (n <= kCensusDeskBound) return lr_stirling2_bruteforce(n, k, 1, r);
    if (n < static_cast<int>(r) || k < static_cast<int>(r) || k > n) return 0;
    const auto array = build_array(catalog_lookup("lr-stirling2", {.l = 1, .r = r}), n);
    return to_int(array.at(n, k));
}

std::vector<Int> lr_eulerian_row(int n, unsigned l, unsigned r) {
    const auto array = build_array(catalog_lookup("lr-eulerian", {.l = l, .r = r}), n);
    std::vector<Int> row;
    for (const Rat& v : array.row(n)) row.push_back(to_int(v));
    return row;
}

Int lr_eulerian_recurrence(int n, int k, unsigned l, unsigned r) {
    if (n < static_cast<int>(r) || k < static_cast<int>(r) - 1 || k > n - 1) return 0;
    const auto array = build_array(catalog_lookup("lr-eulerian", {.l = l, .r = r}), n);
    return to_int(array.at(n, k));
}

}  // namespace talc
