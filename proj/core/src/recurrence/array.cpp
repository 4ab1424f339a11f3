#include "talc/recurrence/array.hpp"

#include <cassert>

#include "talc/errors.hpp"

namespace talc {

Rat TriangularArray::at(long n, long k) const {
    if (n > max_row()) throw row_not_built_error(n);
    if (!spec_.in_triangle(n, k)) return 0;
    const auto& r = rows_[static_cast<std::size_t>(n - spec_.anchor_n)];
    return r[static_cast<std::size_t>(k - spec_.anchor_k)];
}

const std::vector<Rat>& TriangularArray::row(long n) const {
    if (n < spec_.anchor_n || n > max_row()) throw row_not_built_error(n);
    return rows_[static_cast<std::size_t>(n - spec_.anchor_n)];
}

std::vector<Rat> TriangularArray::row_padded(long n, long pad_from_k) const {
    const auto& r = row(n);
    assert(pad_from_k <= spec_.anchor_k);
    std::vector<Rat> out(static_cast<std::size_t>(spec_.anchor_k - pad_from_k), Rat(0));
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::vector<Rat> TriangularArray::row_trimmed(long n) const {
    const auto& r = row(n);
    std::size_t lo = 0, hi = r.size();
    while (lo < hi && r[lo] == 0) ++lo;
    while (hi > lo && r[hi - 1] == 0) --hi;
    return std::vector<Rat>(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

long TriangularArray::trimmed_offset(long n) const {
    const auto& r = row(n);
    std::size_t lo = 0;
    while (lo < r.size() && r[lo] == 0) ++lo;
    return spec_.anchor_k + static_cast<long>(lo);
}

bool TriangularArray::recheck() const {
    const long n0 = spec_.anchor_n, k0 = spec_.anchor_k;
    for (long n = n0 + 1; n <= max_row(); ++n) {
        for (long k = k0; k <= k0 + (n - n0); ++k) {
            const Rat expect = spec_.weights.c(n, k) * at(n - 1, k) +
                               spec_.weights.d(n, k) * at(n - 1, k - 1);
            if (at(n, k) != expect) return false;
        }
    }
    return at(n0, k0) == 1;
}

TriangularArray build_array(const RecurrenceSpec& spec, long max_n) {
    if (max_n < spec.anchor_n)
        throw error("build_array: max_n = " + std::to_string(max_n) + " is below the anchor row " +
                    std::to_string(spec.anchor_n));
    const long n0 = spec.anchor_n, k0 = spec.anchor_k;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(max_n - n0 + 1));
    rows.push_back({Rat(1)});
    for (long n = n0 + 1; n <= max_n; ++n) {
        const auto& prev = rows.back();
        std::vector<Rat> row(static_cast<std::size_t>(n - n0 + 1));
        for (long k = k0; k <= k0 + (n - n0); ++k) {
            const Rat c = spec.weights.c(n, k);
            const Rat d = spec.weights.d(n, k);
            if (c < 0 || d < 0) throw negative_weight_error(n, k);
            const std::size_t i = static_cast<std::size_t>(k - k0);
            Rat v = 0;
            if (i < prev.size()) v += c * prev[i];
            if (i >= 1) v += d * prev[i - 1];
            row[i] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return TriangularArray(spec, std::move(rows));
}

}  // namespace talc
