#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "talc/algebra/numbers.hpp"
#include "talc/recurrence/catalog.hpp"

namespace talc {

/// Parses OEIS b-file content: one "index value" pair per line, blank lines
/// and '#' comments ignored. Throws parse_error naming the offending line.
std::vector<Int> parse_bfile(std::istream& in);
std::vector<Int> parse_bfile_string(const std::string& text);

/// Embedded golden prefix for one OEIS entry (byte-identical to the
/// committed fixture files under data/oeis/).
struct GoldenPrefix {
    std::string oeis_id;
    long offset = 0;
    std::vector<Int> values;
};

const std::vector<GoldenPrefix>& golden_prefixes();
std::optional<GoldenPrefix> golden_prefix(const std::string& oeis_id);

/// How a catalog entry's rows map onto an OEIS entry's by-rows reading
/// order: rows from start_n, dropping drop_left structural cells at the
/// left edge of each row.
struct OeisMapping {
    std::string catalog_key;
    std::string oeis_id;       // verified id
    std::string listed_id;     // id as listed in the source table, if different
    long start_n = 0;
    int drop_left = 0;
    CatalogParams params{};
};

const std::vector<OeisMapping>& catalog_oeis_mapping();
std::optional<OeisMapping> oeis_mapping_for(const std::string& catalog_key);

/// Flattens the catalog entry per the mapping until at least `terms` values
/// are produced.
std::vector<Int> catalog_terms(const OeisMapping& mapping, std::size_t terms);

/// First index where the two disagree (prefix comparison over the shorter
/// length), or nullopt when they agree.
struct ComparisonResult {
    std::size_t compared = 0;
    std::optional<std::size_t> first_mismatch;
    bool matched() const { return !first_mismatch.has_value(); }
};
ComparisonResult compare_terms(const std::vector<Int>& ours, const std::vector<Int>& reference,
                               std::size_t terms);

}  // namespace talc
