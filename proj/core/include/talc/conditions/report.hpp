#pragma once

#include <string>
#include <vector>

#include "talc/algebra/numbers.hpp"

namespace talc {

/// A violated inequality with the indices it occurred at and both sides.
struct Witness {
    std::string inequality;
    std::vector<long> indices;  // meaning documented per checker
    Rat lhs, rhs;
};

struct ConditionReport {
    std::string condition_name;
    long max_n = 0;
    std::vector<Witness> witnesses;  // deterministic scan order
    long cells_checked = 0;
    long cells_skipped = 0;  // a referenced weight base was negative
    std::vector<std::string> notes;

    bool holds() const { return witnesses.empty(); }
    std::string verdict() const { return holds() ? "holds" : "fails"; }
};

}  // namespace talc
