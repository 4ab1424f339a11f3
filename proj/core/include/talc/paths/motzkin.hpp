#pragma once

#include <string>
#include <vector>

#include "talc/paths/path_word.hpp"

namespace talc {

enum class MotzkinStep { U, D, H1, H2 };

std::string to_string(MotzkinStep s);

/// Word over {U, D, H1, H2} with running prefix heights from 0.
/// U adds +1, D adds -1, H1/H2 add 0. A valid encoding ends at height -1,
/// its final step is D, and every proper prefix has height >= 0.
struct MotzkinWord {
    std::vector<MotzkinStep> steps;
    std::vector<int> heights;  // heights[i] = height after step i+1

    bool valid() const;
    std::string to_string() const;
};

/// Encodes the reversed changed suffixes of an injection pair: walking the
/// suffix rows from the top down, the j-th letters of rev(p-suffix) and
/// rev(q-suffix) map as (N,C)->U, (C,N)->D, (N,N)->H1, (C,C)->H2.
/// split_index is the prefix length produced by inject(). Throws
/// invalid_split_error if the resulting word violates the height contract
/// (cannot happen for genuine injection output).
MotzkinWord motzkin_encode(const PathWord& p, const PathWord& q,
                           std::size_t split_index);

/// Weight carried by each encoded step: the product of the weights of the
/// two aligned source steps (c for N, d for C, each at its own end cell).
/// The total product equals wt(p-suffix) * wt(q-suffix).
std::vector<Rat> motzkin_step_weights(const PathWord& p, const PathWord& q,
                                      std::size_t split_index, const WeightSpec& w);

/// (u_index, d_index) pairs, 0-based positions in the word, matching every
/// U with the first D that returns to its height; valid words leave exactly
/// the final D unmatched.
std::vector<std::pair<std::size_t, std::size_t>> matched_up_down_pairs(const MotzkinWord& m);

}  // namespace talc
