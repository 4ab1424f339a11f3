#include "talc/paths/path_word.hpp"

#include <cassert>

#include "talc/errors.hpp"

namespace talc {

std::string Cell::to_string() const {
    return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

PathWord::PathWord(Cell start, std::string steps) : start_(start), steps_(std::move(steps)) {
    for (char ch : steps_) assert(ch == 'N' || ch == 'C');
}

Cell PathWord::end() const { return cell_after(steps_.size()); }

Cell PathWord::cell_after(std::size_t i) const {
    assert(i <= steps_.size());
    long crossings = 0;
    for (std::size_t j = 0; j < i; ++j)
        if (steps_[j] == 'C') ++crossings;
    return Cell{start_.k + crossings, start_.n + static_cast<long>(i)};
}

std::vector<PathWord> enumerate_paths(Cell start, Cell end) {
    const long dn = end.n - start.n, dk = end.k - start.k;
    if (dn < 0 || dk < 0 || dk > dn)
        throw unreachable_error("no path " + start.to_string() + " -> " + end.to_string());
    std::vector<PathWord> out;
    std::string word(static_cast<std::size_t>(dn), 'N');
    // N explored before C at every position.
    auto rec = [&](auto&& self, long pos, long crossings_left) -> void {
        if (pos == dn) {
            if (crossings_left == 0) out.emplace_back(start, word);
            return;
        }
        const long remaining = dn - pos;
        if (crossings_left < remaining) {
            word[static_cast<std::size_t>(pos)] = 'N';
            self(self, pos + 1, crossings_left);
        }
        if (crossings_left > 0) {
            word[static_cast<std::size_t>(pos)] = 'C';
            self(self, pos + 1, crossings_left - 1);
        }
    };
    rec(rec, 0, dk);
    return out;
}

Int count_paths(Cell start, Cell end) {
    const long dn = end.n - start.n, dk = end.k - start.k;
    if (dn < 0 || dk < 0 || dk > dn)
        throw unreachable_error("no path " + start.to_string() + " -> " + end.to_string());
    return binomial(dn, dk);
}

Rat path_weight(const PathWord& p, const WeightSpec& w) {
    Rat acc = 1;
    Cell cur = p.start();
    for (char step : p.steps()) {
        if (step == 'C') ++cur.k;
        ++cur.n;
        acc *= (step == 'N') ? w.c(cur.n, cur.k) : w.d(cur.n, cur.k);
    }
    return acc;
}

Rat path_sum(Cell end, const WeightSpec& w, Cell anchor) {
    Rat acc = 0;
    for (const auto& p : enumerate_paths(anchor, end)) acc += path_weight(p, w);
    return acc;
}

}  // namespace talc
