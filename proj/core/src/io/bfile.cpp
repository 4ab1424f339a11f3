#include "talc/io/bfile.hpp"

#include <sstream>

#include "talc/errors.hpp"
#include "talc/recurrence/array.hpp"

namespace talc {

std::vector<Int> parse_bfile(std::istream& in) {
    std::vector<Int> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream fields(line);
        std::string index_tok, value_tok, extra;
        fields >> index_tok >> value_tok;
        if (value_tok.empty()) throw parse_error(lineno, "expected \"index value\"");
        if (fields >> extra) throw parse_error(lineno, "trailing content: " + extra);
        try {
            (void)Int(index_tok);
            values.emplace_back(value_tok);
        } catch (const std::exception&) {
            throw parse_error(lineno, "not an integer pair: " + line);
        }
    }
    return values;
}

std::vector<Int> parse_bfile_string(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

namespace {

struct RawGolden {
    const char* id;
    long offset;
    std::vector<const char*> values;
};

const std::vector<RawGolden>& raw_goldens() {
    static const std::vector<RawGolden> raw = {
#include "golden_data.inc"
    };
    return raw;
}

}  // namespace

const std::vector<GoldenPrefix>& golden_prefixes() {
    static const std::vector<GoldenPrefix> goldens = [] {
        std::vector<GoldenPrefix> out;
        for (const auto& raw : raw_goldens()) {
            GoldenPrefix g;
            g.oeis_id = raw.id;
            g.offset = raw.offset;
            for (const char* v : raw.values) g.values.emplace_back(v);
            out.push_back(std::move(g));
        }
        return out;
    }();
    return goldens;
}

std::optional<GoldenPrefix> golden_prefix(const std::string& oeis_id) {
    for (const auto& g : golden_prefixes())
        if (g.oeis_id == oeis_id) return g;
    return std::nullopt;
}

const std::vector<OeisMapping>& catalog_oeis_mapping() {
    // The source table lists A015278 for the Lah triangle; the generated
    // prefix matches A105278 (see data/oeis/README.md).
    static const std::vector<OeisMapping> mappings = {
        {"binomial", "A007318", "", 0, 0, {}},
        {"stirling-subset", "A008277", "", 1, 1, {}},
        {"stirling-cycle", "A132393", "", 0, 0, {}},
        {"lah", "A105278", "A015278", 1, 1, {}},
        {"legendre-stirling", "A071951", "", 1, 1, {}},
        {"stirling-lah", "A035342", "", 1, 1, {}},
        {"nu-eulerian", "A008517", "", 1, 0, {.nu = 2}},
    };
    return mappings;
}

std::optional<OeisMapping> oeis_mapping_for(const std::string& catalog_key) {
    for (const auto& m : catalog_oeis_mapping())
        if (m.catalog_key == catalog_key) return m;
    return std::nullopt;
}

std::vector<Int> catalog_terms(const OeisMapping& mapping, std::size_t terms) {
    const RecurrenceSpec spec = catalog_lookup(mapping.catalog_key, mapping.params);
    long max_n = mapping.start_n;
    std::size_t count = 0;
    while (count < terms) {
        count += static_cast<std::size_t>(
            std::max<long>(0, max_n - spec.anchor_n + 1 - mapping.drop_left));
        if (count >= terms) break;
        ++max_n;
    }
    const TriangularArray array = build_array(spec, max_n);
    std::vector<Int> out;
    for (long n = mapping.start_n; n <= max_n && out.size() < terms; ++n) {
        const auto& row = array.row(n);
        for (std::size_t i = static_cast<std::size_t>(mapping.drop_left);
             i < row.size() && out.size() < terms; ++i)
            out.push_back(to_int(row[i]));
    }
    return out;
}

ComparisonResult compare_terms(const std::vector<Int>& ours, const std::vector<Int>& reference,
                               std::size_t terms) {
    ComparisonResult result;
    result.compared = std::min({terms, ours.size(), reference.size()});
    for (std::size_t i = 0; i < result.compared; ++i) {
        if (ours[i] != reference[i]) {
            result.first_mismatch = i;
            break;
        }
    }
    return result;
}

}  // namespace talc
