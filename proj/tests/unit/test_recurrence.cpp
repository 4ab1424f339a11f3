#include <doctest.h>

#include "talc/combinat/census.hpp"
#include "talc/combinat/lr_families.hpp"
#include "talc/errors.hpp"
#include "talc/paths/path_word.hpp"
#include "talc/recurrence/array.hpp"
#include "talc/recurrence/catalog.hpp"

using namespace talc;

namespace {

std::vector<Rat> rats(std::initializer_list<long> vs) {
    std::vector<Rat> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("binomial rows match the additive rule") {
    const auto array = build_array(catalog_lookup("binomial"), 8);
    CHECK(array.row(4) == rats({1, 4, 6, 4, 1}));
    // independent oracle: Pascal's rule unrolled by hand
    std::vector<std::vector<Rat>> pascal{{1}};
    for (int n = 1; n <= 8; ++n) {
        std::vector<Rat> row(static_cast<std::size_t>(n) + 1, Rat(1));
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = pascal.back()[static_cast<std::size_t>(k - 1)] +
                                               pascal.back()[static_cast<std::size_t>(k)];
        pascal.push_back(row);
        CHECK(array.row(n) == row);
    }
    CHECK(array.recheck());
}

TEST_CASE("lah rows count partitions into linearly ordered blocks") {
    const auto array = build_array(catalog_lookup("lah"), 7);
    CHECK(array.row(3) == rats({0, 6, 6, 1}));
    CHECK(array.row_trimmed(3) == rats({6, 6, 1}));
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(array.at(n, k) == Rat(lr_lah_bruteforce(n, k, 1, 1)));
}

TEST_CASE("legendre-stirling rows from the tabulated weight") {
    const auto array = build_array(catalog_lookup("legendre-stirling"), 6);
    // recurrence unrolled by hand: LS(3,1) = 2*LS(2,1) = 4, LS(3,2) = 6 + 2,
    // LS(3,3) = 1; cross-checked against the A071951 fixture prefix
    CHECK(array.row(3) == rats({0, 4, 8, 1}));
    CHECK(array.row(4) == rats({0, 8, 52, 20, 1}));
    CHECK(array.recheck());
}

TEST_CASE("stirling-subset rows count set partitions") {
    const auto array = build_array(catalog_lookup("stirling-subset"), 7);
    CHECK(array.row(4) == rats({0, 1, 7, 6, 1}));
    CHECK(array.row_trimmed(4) == rats({1, 7, 6, 1}));  // k = 1..4
    CHECK(array.trimmed_offset(4) == 1);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(array.at(n, k) == Rat(lr_stirling2_bruteforce(n, k, 1, 1)));
}

TEST_CASE("row access: padded, trimmed, anchor, bounds") {
    const auto eulerian = build_array(catalog_lookup("eulerian"), 5);
    CHECK(eulerian.row(4) == rats({1, 11, 11, 1}));
    CHECK(eulerian.row(1) == rats({1}));
    CHECK_THROWS_AS(eulerian.row(6), row_not_built_error);
    CHECK_THROWS_AS(eulerian.at(9, 0), row_not_built_error);
    CHECK(eulerian.at(3, -2) == 0);
    CHECK(eulerian.at(3, 3) == 0);

    const auto lr = build_array(catalog_lookup("lr-stirling2", {.l = 1, .r = 2}), 4);
    CHECK(lr.row_padded(3, 0) == rats({0, 0, 2, 1}));
    CHECK(lr.row_trimmed(3) == rats({2, 1}));
}

TEST_CASE("negative weight evaluation aborts the build") {
    RecurrenceSpec bad;
    bad.name = "negative-c";
    bad.weights.c = Weight::affine_power(0, 0, -1, 1);
    bad.weights.d = Weight::affine_power(0, 0, 1, 1);
    CHECK_THROWS_AS(build_array(bad, 3), negative_weight_error);
}

TEST_CASE("power lift replaces weights by their l-th powers") {
    const auto subset = catalog_lookup("stirling-subset");
    const auto lifted = power_lift(subset, 2);
    for (long n = 1; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(lifted.weights.c(n, k) == Rat(k * k));
            CHECK(lifted.weights.d(n, k) == 1);
        }
    const auto same = power_lift(subset, 1);
    for (long n = 1; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) CHECK(same.weights.c(n, k) == subset.weights.c(n, k));

    const auto cycle3 = power_lift(catalog_lookup("stirling-cycle"), 3);
    CHECK(cycle3.weights.c(5, 2) == Rat(64));  // (n-1)^3

    // lifting a tabulated weight
    const auto legendre2 = power_lift(catalog_lookup("legendre-stirling"), 2);
    CHECK(legendre2.weights.c(4, 2) == Rat(36));
}

TEST_CASE("power-lift consistency over the whole build region") {
    const auto base = catalog_lookup("lah");
    for (unsigned l : {2u, 3u}) {
        const auto lifted = power_lift(base, l);
        for (long n = 1; n <= 8; ++n)
            for (long k = 0; k <= n; ++k) {
                CHECK(lifted.weights.c(n, k) == pow_rat(base.weights.c(n, k), l));
                CHECK(lifted.weights.d(n, k) == pow_rat(base.weights.d(n, k), l));
            }
    }
}

TEST_CASE("recurrence recheck holds for every sweep spec") {
    for (const auto& spec : catalog_sweep_specs(2, 2)) {
        const auto array = build_array(spec, 9);
        CAPTURE(spec.name);
        CHECK(array.recheck());
    }
}

TEST_CASE("catalog parameters land where the table says") {
    const auto subset = catalog_lookup("stirling-subset");
    CHECK(subset.anchor_n == 0);
    CHECK(subset.anchor_k == 0);
    CHECK(subset.weights.c(5, 3) == 3);
    CHECK(subset.weights.d(5, 3) == 1);

    const auto nu2 = catalog_lookup("nu-eulerian", {.nu = 2});
    CHECK(nu2.weights.c(7, 4) == 5);           // k+1
    CHECK(nu2.weights.d(7, 4) == 2 * 7 - 4 - 1);  // nu*n - k + 1 - nu

    const auto lrlah = catalog_lookup("lr-lah", {.l = 3, .r = 2});
    CHECK(lrlah.anchor_n == 2);
    CHECK(lrlah.anchor_k == 2);
    CHECK(lrlah.weights.c(4, 3) == Rat(6 * 6 * 6));  // (n+k-1)^3
    CHECK(lrlah.weights.d(4, 3) == 1);

    CHECK_THROWS_AS(catalog_lookup("no-such-family"), unknown_name_error);
}

TEST_CASE("the four lr families reproduce their censuses at l = 1, r = 1") {
    for (int n = 1; n <= 6; ++n) {
        const auto e = build_array(catalog_lookup("lr-eulerian"), n);
        for (int k = 0; k < n; ++k) CHECK(e.at(n, k) == Rat(lr_eulerian_bruteforce(n, k, 1, 1)));
        const auto s1 = build_array(catalog_lookup("lr-stirling1"), n);
        for (int k = 1; k <= n; ++k) CHECK(s1.at(n, k) == Rat(lr_stirling1_bruteforce(n, k, 1, 1)));
    }
}

TEST_CASE("path sums reproduce array entries (small spot check)") {
    const auto spec = catalog_lookup("stirling-subset");
    const auto array = build_array(spec, 6);
    const Cell anchor{spec.anchor_k, spec.anchor_n};
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(array.at(n, k) == path_sum(Cell{k, n}, spec.weights, anchor));
}
