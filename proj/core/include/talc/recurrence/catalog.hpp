#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talc/recurrence/weight.hpp"

namespace talc {

/// Parameters for the parameterized catalog families. Unused fields are
/// ignored by entries that do not take them.
struct CatalogParams {
    unsigned l = 1;  // power on the weights ((l,r) families)
    unsigned r = 1;  // leader constraint ((l,r) families, broder)
    long m = 1;      // m-associated Lah
    long nu = 1;     // nu-order Eulerian
    long j = 1;      // 1/j-Eulerian
};

/// Looks up a named recurrence, with anchors calibrated against brute-force
/// counts / OEIS prefixes (recorded in data/oeis/README.md). Throws
/// unknown_name_error for unknown keys; the message lists the valid names.
RecurrenceSpec catalog_lookup(const std::string& name, const CatalogParams& params = {});

std::vector<std::string> catalog_names();

/// Every concrete spec the verification sweeps run over: all non-(l,r)
/// entries (parameterized ones at a couple of parameter values) plus the
/// four (l,r) families for l <= l_max, r <= r_max.
std::vector<RecurrenceSpec> catalog_sweep_specs(unsigned l_max = 3, unsigned r_max = 3);

/// Closed-form parameters (alpha,beta,gamma; alpha',beta',gamma') of an
/// affine-power catalog entry, when both weights are affine powers.
struct AffineParams {
    AffineForm c, d;
};
std::optional<AffineParams> affine_params(const RecurrenceSpec& spec);

}  // namespace talc
