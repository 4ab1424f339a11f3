#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "talc/conditions/report.hpp"

namespace talc::cli {

enum class Format { text, json, csv };

Format parse_format(const std::string& s);

/// The shared report envelope: {command, config, verdict, witnesses, values}.
/// All big integers and rationals render as decimal strings.
nlohmann::json envelope(const std::string& command, nlohmann::json config,
                        const std::string& verdict);

nlohmann::json witness_json(const Witness& w);
nlohmann::json condition_json(const ConditionReport& r, std::size_t max_witnesses);

void print_condition_text(const ConditionReport& r, std::size_t max_witnesses);

}  // namespace talc::cli
