#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace talc {

/// Permutation of [n] in one-line notation (1-based values).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& one_line() const { return word_; }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

    int descents() const;

    /// First letters of the maximal increasing runs.
    std::set<int> block_leaders() const;

    /// Minimum elements of the cycles of the cycle decomposition.
    std::set<int> cycle_leaders() const;

    /// One-line digit string for n <= 9, comma-separated beyond.
    std::string to_string() const;
    static Permutation parse(const std::string& s);

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> word_;
};

/// Calls fn for every permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Leader set as a bitmask: bit (i-1) set iff i is in the set.
std::uint32_t leaders_mask(const std::set<int>& leaders);

}  // namespace talc
