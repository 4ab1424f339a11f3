#include "report_out.hpp"

#include <iostream>

#include <CLI11.hpp>

namespace talc::cli {

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "expected text, json or csv");
}

nlohmann::json envelope(const std::string& command, nlohmann::json config,
                        const std::string& verdict) {
    return {{"command", command},
            {"config", std::move(config)},
            {"verdict", verdict},
            {"witnesses", nlohmann::json::array()},
            {"values", nlohmann::json::array()}};
}

nlohmann::json witness_json(const Witness& w) {
    return {{"inequality", w.inequality},
            {"indices", w.indices},
            {"lhs", to_string(w.lhs)},
            {"rhs", to_string(w.rhs)}};
}

nlohmann::json condition_json(const ConditionReport& r, std::size_t max_witnesses) {
    nlohmann::json out{{"condition", r.condition_name},
                       {"max_n", r.max_n},
                       {"verdict", r.verdict()},
                       {"cells_checked", r.cells_checked},
                       {"cells_skipped", r.cells_skipped},
                       {"witness_count", r.witnesses.size()},
                       {"notes", r.notes},
                       {"witnesses", nlohmann::json::array()}};
    for (std::size_t i = 0; i < r.witnesses.size() && i < max_witnesses; ++i)
        out["witnesses"].push_back(witness_json(r.witnesses[i]));
    return out;
}

void print_condition_text(const ConditionReport& r, std::size_t max_witnesses) {
    std::cout << r.condition_name << " (n <= " << r.max_n << "): " << r.verdict() << "  ["
              << r.cells_checked << " checked, " << r.cells_skipped << " skipped]\n";
    for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
    for (std::size_t i = 0; i < r.witnesses.size() && i < max_witnesses; ++i) {
        const auto& w = r.witnesses[i];
        std::cout << "  violated: " << w.inequality << " at (";
        for (std::size_t j = 0; j < w.indices.size(); ++j)
            std::cout << (j ? "," : "") << w.indices[j];
        std::cout << "): " << to_string(w.lhs) << " vs " << to_string(w.rhs) << "\n";
    }
    if (r.witnesses.size() > max_witnesses)
        std::cout << "  ... " << (r.witnesses.size() - max_witnesses) << " more witnesses\n";
}

}  // namespace talc::cli
