#pragma once

#include <vector>

#include "talc/recurrence/weight.hpp"

namespace talc {

/// Exactly built rows of a triangular recurrence. Row n holds the cells
/// k = k0 .. k0 + (n - n0); everything outside is structurally zero.
/// Immutable after build_array returns.
class TriangularArray {
  public:
    TriangularArray(RecurrenceSpec spec, std::vector<std::vector<Rat>> rows)
        : spec_(std::move(spec)), rows_(std::move(rows)) {}

    const RecurrenceSpec& spec() const { return spec_; }
    long max_row() const { return spec_.anchor_n + static_cast<long>(rows_.size()) - 1; }

    /// T(n,k), zero outside the built triangle. Throws row_not_built_error
    /// for rows above max_row().
    Rat at(long n, long k) const;

    /// Raw triangle cells k0..k0+(n-n0) of row n.
    const std::vector<Rat>& row(long n) const;

    /// Row with structural zeros padded down to column `pad_from_k`
    /// (pad_from_k <= k0).
    std::vector<Rat> row_padded(long n, long pad_from_k) const;

    /// Row with zero cells stripped from both edges (interior zeros stay).
    std::vector<Rat> row_trimmed(long n) const;

    /// Column of the first cell row_trimmed(n) keeps.
    long trimmed_offset(long n) const;

    /// Re-evaluates every entry against the recurrence (independent pass
    /// over the weights); true iff all residuals are exactly zero.
    bool recheck() const;

  private:
    RecurrenceSpec spec_;
    std::vector<std::vector<Rat>> rows_;
};

/// Builds rows n0..max_n exactly. Throws negative_weight_error if a weight
/// evaluates negative at any in-triangle cell of a built row.
TriangularArray build_array(const RecurrenceSpec& spec, long max_n);

}  // namespace talc
