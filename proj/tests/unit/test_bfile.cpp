#include <doctest.h>

#include <fstream>
#include <sstream>

#include "talc/errors.hpp"
#include "talc/io/bfile.hpp"

using namespace talc;

#ifndef TALC_DATA_DIR
#define TALC_DATA_DIR "data"
#endif

TEST_CASE("b-file parsing: comments, blanks, values, errors") {
    std::istringstream good("# header\n0 1\n1 1\n\n2 2\n3 -6\n");
    const auto values = parse_bfile(good);
    REQUIRE(values.size() == 4);
    CHECK(values[0] == 1);
    CHECK(values[3] == -6);

    try {
        parse_bfile_string("0 1\nabc\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_bfile_string("0 1 junk\n"), parse_error);
    CHECK_THROWS_AS(parse_bfile_string("0 x\n"), parse_error);
}

TEST_CASE("embedded goldens are byte-identical to the committed fixtures") {
    for (const auto& golden : golden_prefixes()) {
        const std::string path = std::string(TALC_DATA_DIR) + "/oeis/b" +
                                 golden.oeis_id.substr(1) + ".txt";
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), path);
        const auto values = parse_bfile(in);
        CHECK(values == golden.values);
    }
}

TEST_CASE("catalog arrays reproduce the golden prefixes") {
    for (const auto& mapping : catalog_oeis_mapping()) {
        const auto golden = golden_prefix(mapping.oeis_id);
        REQUIRE_MESSAGE(golden.has_value(), mapping.oeis_id);
        const auto ours = catalog_terms(mapping, golden->values.size());
        const auto result = compare_terms(ours, golden->values, golden->values.size());
        CAPTURE(mapping.catalog_key);
        CHECK(result.compared >= 50);
        CHECK(result.matched());
    }
}

TEST_CASE("the listed Lah id is recorded as a discrepancy, not silently corrected") {
    const auto mapping = oeis_mapping_for("lah");
    REQUIRE(mapping.has_value());
    CHECK(mapping->oeis_id == "A105278");
    CHECK(mapping->listed_id == "A015278");
}

TEST_CASE("comparison reports the first mismatch index") {
    std::vector<Int> a{1, 2, 3, 4}, b{1, 2, 9, 4};
    const auto r = compare_terms(a, b, 4);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(*r.first_mismatch == 2);
    CHECK_FALSE(compare_terms(a, a, 4).first_mismatch.has_value());
}
