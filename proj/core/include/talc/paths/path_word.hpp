#pragma once

#include <string>
#include <vector>

#include "talc/recurrence/weight.hpp"

namespace talc {

/// Lattice cell, written (k, n): column k, row n.
struct Cell {
    long k = 0;
    long n = 0;
    bool operator==(const Cell&) const = default;
    std::string to_string() const;
};

/// A lattice path as a word over {N, C} with a start cell.
/// N moves (k,n) -> (k,n+1); C moves (k,n) -> (k+1,n+1).
class PathWord {
  public:
    PathWord() = default;
    PathWord(Cell start, std::string steps);

    const Cell& start() const { return start_; }
    const std::string& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }
    Cell end() const;

    /// End cell of the i-th step, 1-based.
    Cell cell_after(std::size_t i) const;

    bool operator==(const PathWord&) const = default;

  private:
    Cell start_;
    std::string steps_;  // characters 'N' and 'C' only
};

/// All C(dn, dk) paths from start to end, in the deterministic order that
/// explores N before C at every position. Throws unreachable_error unless
/// dn >= dk >= 0.
std::vector<PathWord> enumerate_paths(Cell start, Cell end);

Int count_paths(Cell start, Cell end);

/// Product of step weights: c(n,k) for an N step ending at (k,n), d(n,k)
/// for a C step ending at (k,n). The empty path has weight 1.
Rat path_weight(const PathWord& p, const WeightSpec& w);

/// Sum of path_weight over all paths anchor -> end; equals the triangular
/// array entry T(n,k) built from the same weights and anchor.
Rat path_sum(Cell end, const WeightSpec& w, Cell anchor);

}  // namespace talc
