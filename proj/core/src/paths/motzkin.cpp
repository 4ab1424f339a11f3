#include "talc/paths/motzkin.hpp"

#include <cassert>

#include "talc/errors.hpp"

namespace talc {

std::string to_string(MotzkinStep s) {
    switch (s) {
        case MotzkinStep::U: return "U";
        case MotzkinStep::D: return "D";
        case MotzkinStep::H1: return "H1";
        case MotzkinStep::H2: return "H2";
    }
    return "?";
}

bool MotzkinWord::valid() const {
    if (steps.empty() || heights.size() != steps.size()) return false;
    for (std::size_t i = 0; i + 1 < heights.size(); ++i)
        if (heights[i] < 0) return false;
    return heights.back() == -1 && steps.back() == MotzkinStep::D;
}

std::string MotzkinWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += " ";
        out += talc::to_string(steps[i]);
    }
    return out;
}

namespace {

MotzkinStep classify(char p_step, char q_step) {
    if (p_step == 'N' && q_step == 'C') return MotzkinStep::U;
    if (p_step == 'C' && q_step == 'N') return MotzkinStep::D;
    if (p_step == 'N' && q_step == 'N') return MotzkinStep::H1;
    return MotzkinStep::H2;
}

int delta(MotzkinStep s) {
    if (s == MotzkinStep::U) return 1;
    if (s == MotzkinStep::D) return -1;
    return 0;
}

}  // namespace

MotzkinWord motzkin_encode(const PathWord& p, const PathWord& q, std::size_t split_index) {
    assert(p.length() == q.length() && split_index < p.length());
    MotzkinWord m;
    int h = 0;
    // j-th letters of the reversed suffixes: walk the rows top-down.
    for (std::size_t j = p.length(); j > split_index; --j) {
        const MotzkinStep s = classify(p.steps()[j - 1], q.steps()[j - 1]);
        h += delta(s);
        m.steps.push_back(s);
        m.heights.push_back(h);
    }
    if (!m.valid())
        throw invalid_split_error("encoding at split " + std::to_string(split_index) +
                                  " violates the height contract");
    return m;
}

std::vector<Rat> motzkin_step_weights(const PathWord& p, const PathWord& q,
                                      std::size_t split_index, const WeightSpec& w) {
    assert(p.length() == q.length() && split_index < p.length());
    auto step_weight = [&w](const PathWord& path, std::size_t j) {
        const Cell c = path.cell_after(j);
        return path.steps()[j - 1] == 'N' ? w.c(c.n, c.k) : w.d(c.n, c.k);
    };
    std::vector<Rat> out;
    for (std::size_t j = p.length(); j > split_index; --j)
        out.push_back(step_weight(p, j) * step_weight(q, j));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> matched_up_down_pairs(const MotzkinWord& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < m.steps.size(); ++i) {
        if (m.steps[i] == MotzkinStep::U) open.push_back(i);
        if (m.steps[i] == MotzkinStep::D && !open.empty()) {
            pairs.emplace_back(open.back(), i);
            open.pop_back();
        }
    }
    return pairs;
}

}  // namespace talc
