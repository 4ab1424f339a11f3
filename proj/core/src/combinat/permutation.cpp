#include "talc/combinat/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace talc {

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
#ifndef NDEBUG
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
        assert(v >= 1 && v <= static_cast<int>(word_.size()) && !seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = true;
    }
#endif
}

int Permutation::descents() const {
    int d = 0;
    for (std::size_t i = 0; i + 1 < word_.size(); ++i)
        if (word_[i] > word_[i + 1]) ++d;
    return d;
}

std::set<int> Permutation::block_leaders() const {
    std::set<int> leaders;
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (i == 0 || word_[i] < word_[i - 1]) leaders.insert(word_[i]);
    return leaders;
}

std::set<int> Permutation::cycle_leaders() const {
    std::set<int> leaders;
    std::vector<bool> seen(word_.size() + 1, false);
    for (int s = 1; s <= size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int cur = s, mn = s;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = (*this)(cur);
            mn = std::min(mn, cur);
        }
        leaders.insert(mn);
    }
    return leaders;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    const bool commas = size() > 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (commas && i) os << ",";
        os << word_[i];
    }
    return os.str();
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> vals;
    if (s.find(',') != std::string::npos) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) vals.push_back(std::stoi(tok));
    } else {
        for (char ch : s) vals.push_back(ch - '0');
    }
    return Permutation(std::move(vals));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

std::uint32_t leaders_mask(const std::set<int>& leaders) {
    std::uint32_t mask = 0;
    for (int v : leaders) mask |= (1u << (v - 1));
    return mask;
}

}  // namespace talc
