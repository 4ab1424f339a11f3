#include "talc/combinat/stirling_eulerian.hpp"

#include "talc/combinat/census.hpp"
#include "talc/combinat/lr_families.hpp"
#include "talc/combinat/permutation.hpp"

namespace talc {

namespace {

bool contains_first_r(const std::set<int>& s, unsigned r) {
    for (unsigned j = 1; j <= r; ++j)
        if (!s.count(static_cast<int>(j))) return false;
    return true;
}

int missing_leaders(const std::set<int>& leaders, unsigned r) {
    int m = 0;
    for (unsigned j = 1; j <= r; ++j)
        if (!leaders.count(static_cast<int>(j))) ++m;
    return m;
}

}  // namespace

Int run_leader_count(int n, int k, unsigned r) {
    Int count = 0;
    for_each_permutation(n, [&](const Permutation& pi) {
        if (pi.descents() == k && contains_first_r(pi.block_leaders(), r)) ++count;
    });
    return count;
}

Int function_leader_count(int n, int k, unsigned r) {
    return lr_eulerian_bruteforce(n, k, 1, r);
}

Int r_descent_count(int n, int k, unsigned r) {
    Int count = 0;
    for_each_permutation(n, [&](const Permutation& pi) {
        if (pi.descents() + missing_leaders(pi.block_leaders(), r) == k) ++count;
    });
    return count;
}

IdentityReport verify_stirling_eulerian_identity(int n, unsigned r) {
    IdentityReport report;
    report.n = n;
    report.r = r;

    std::vector<Int> s_r(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) s_r[static_cast<std::size_t>(k)] = r_stirling2(n, k, r);

    // the three candidate counts, k = 0..n-1
    std::vector<Int> by_rdes(static_cast<std::size_t>(n)), by_runs(static_cast<std::size_t>(n)),
        by_funcs(static_cast<std::size_t>(n));
    for_each_permutation(n, [&](const Permutation& pi) {
        const auto leaders = pi.block_leaders();
        const int d = pi.descents();
        const int stat = d + missing_leaders(leaders, r);
        if (stat < n) by_rdes[static_cast<std::size_t>(stat)] += 1;
        if (contains_first_r(leaders, r)) by_runs[static_cast<std::size_t>(d)] += 1;
    });
    for (int k = 0; k < n; ++k)
        by_funcs[static_cast<std::size_t>(k)] = function_leader_count(n, k, r);

    auto rhs_with = [&](const std::vector<Int>& a, int k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i)
            if (i - 1 < n) acc += a[static_cast<std::size_t>(i - 1)] * binomial(n - i, k - i);
        return acc;
    };

    for (int k = static_cast<int>(r); k <= n; ++k) {
        IdentityRow row;
        row.k = k;
        row.lhs = factorial(static_cast<unsigned>(k)) * s_r[static_cast<std::size_t>(k)];
        row.rhs_r_descent = rhs_with(by_rdes, k);
        row.rhs_run_leader = rhs_with(by_runs, k);
        row.rhs_function_leader = rhs_with(by_funcs, k);
        if (row.lhs != row.rhs_r_descent) report.identity_holds = false;
        if (row.lhs != row.rhs_run_leader || row.lhs != row.rhs_function_leader)
            report.literal_readings_match = false;
        report.rows.push_back(std::move(row));
    }

    for (int k = 1; k <= n; ++k) {
        InversionRow row;
        row.k = k;
        row.lhs = (k - 1 < n) ? by_rdes[static_cast<std::size_t>(k - 1)] : Int(0);
        Int acc = 0;
        for (int i = 1; i <= k; ++i) {
            const Int term = s_r[static_cast<std::size_t>(i)] * binomial(n - i, k - i) *
                             factorial(static_cast<unsigned>(i));
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        row.rhs = acc;
        if (row.lhs != row.rhs) report.inversion_holds = false;
        report.inversion_rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace talc
