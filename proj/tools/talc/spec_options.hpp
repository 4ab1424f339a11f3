#pragma once

#include <string>

#include <CLI11.hpp>

#include "talc/recurrence/catalog.hpp"

namespace talc::cli {

/// Spec selection shared by the subcommands: a catalog name (with family
/// parameters) or an inline description, never both.
struct SpecOptions {
    std::string catalog;
    unsigned l = 1;
    unsigned r = 1;
    long m = 2;
    long nu = 2;
    long j = 2;

    // inline affine-power form
    std::string alpha, beta, gamma, alpha_prime, beta_prime, gamma_prime;
    unsigned inline_l = 1;
    long anchor_n = 0;
    long anchor_k = 0;

    // inline tabulated escape hatch: coefficients of a polynomial in k
    std::string c_kpoly, d_kpoly;

    bool inline_affine_given() const { return !alpha.empty(); }
    bool inline_kpoly_given() const { return !c_kpoly.empty() || !d_kpoly.empty(); }

    void attach(CLI::App& cmd);
    RecurrenceSpec resolve() const;  // throws CLI::ValidationError on misuse
    std::string describe() const;
};

}  // namespace talc::cli
