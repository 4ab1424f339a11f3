#include "talc/combinat/subexceedant.hpp"

#include <cassert>
#include <sstream>

namespace talc {

SubexceedantFunction::SubexceedantFunction(std::vector<int> values) : values_(std::move(values)) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < values_.size(); ++i)
        assert(values_[i] >= 1 && values_[i] <= static_cast<int>(i) + 1);
#endif
}

std::set<int> SubexceedantFunction::block_leaders() const {
    std::set<int> leaders;
    std::vector<bool> seen(values_.size() + 1, false);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const int v = values_[i];
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            leaders.insert(static_cast<int>(i) + 1);
        }
    }
    return leaders;
}

std::set<int> SubexceedantFunction::leader_values() const {
    std::set<int> vals;
    for (int i : block_leaders()) vals.insert((*this)(i));
    return vals;
}

std::string SubexceedantFunction::to_string() const {
    std::ostringstream os;
    const bool commas = size() > 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (commas && i) os << ",";
        os << values_[i];
    }
    return os.str();
}

SubexceedantFunction SubexceedantFunction::parse(const std::string& s) {
    std::vector<int> vals;
    if (s.find(',') != std::string::npos) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) vals.push_back(std::stoi(tok));
    } else {
        for (char ch : s) vals.push_back(ch - '0');
    }
    return SubexceedantFunction(std::move(vals));
}

void for_each_subexceedant(int n, const std::function<void(const SubexceedantFunction&)>& fn) {
    std::vector<int> values(static_cast<std::size_t>(n), 1);
    while (true) {
        fn(SubexceedantFunction(values));
        // odometer: digit i ranges over 1..i+1
        int i = n - 1;
        while (i >= 0 && values[static_cast<std::size_t>(i)] == i + 1) {
            values[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) return;
        ++values[static_cast<std::size_t>(i)];
    }
}

}  // namespace talc
