#pragma once

#include "talc/conditions/report.hpp"
#include "talc/recurrence/catalog.hpp"
#include "talc/recurrence/weight.hpp"

namespace talc {

// Bounded exhaustive checkers for the sufficient log-concavity conditions.
// All scans walk rows n0 < n <= max_n over the structural triangle extended
// by one cell on each side; a cell or tuple referencing a weight whose
// affine base (or tabulated value) is negative is counted as skipped rather
// than checked, matching the theorems' nonnegative-coefficient hypotheses.
// Reports are deterministic: identical inputs produce identical witnesses
// in identical order.

/// Concavity of both coefficients: 2c(n,k) >= c(n,k-1) + c(n,k+1), same for d.
ConditionReport check_kurtz(const RecurrenceSpec& spec, long max_n);

/// Log-concavity of c and d in k plus the cross-product inequality
/// d(n,k-1)c(n,k+1) + d(n,k+1)c(n,k-1) <= 2 d(n,k)c(n,k). Notes when a
/// scanned weight is non-integral (the theorem hypothesizes integers).
ConditionReport check_sagan(const RecurrenceSpec& spec, long max_n);

/// The three-part sufficient condition:
///   (i)  c, d log-concave in k;
///   (ii) c(n1,k1)d(n1,k2)d(n2,l1)c(n2,l2) <=
///        c(n1,k1+1)d(n1,k2-1)d(n2,l1+1)c(n2,l2-1) over all tuples with
///        n2>n1; l2>k2>k1; l2>l1>k1; k2-k1 = l2-l1+1; n2-n1 >= l2-k2;
///        n2-n1 >= l1-k1 (constraints re-validated inside the loop);
///   (iii) d(n,k+1)c(n,k) <= d(n,k)c(n,k+1) for all scanned n, k.
ConditionReport check_main(const RecurrenceSpec& spec, long max_n);

/// Closed-form parameter test on (alpha,beta,gamma; alpha',beta',gamma'):
/// alpha, alpha', beta >= 0; beta' in [-alpha', 0]; alpha+beta+gamma >= 0
/// and alpha'+beta'+gamma' >= 0. Verdict is independent of the exponent l.
ConditionReport check_abc(const AffineParams& params);

/// Direct row-by-row log-concavity of the built array, independent of any
/// sufficient condition. Build errors propagate.
ConditionReport scan_log_concavity(const RecurrenceSpec& spec, long max_n);

}  // namespace talc
