#pragma once

// Named verification suites.  Each returns a Report whose checks are exact
// (integer or modular) coefficient comparisons; quotient identities are
// verified in denominator-cleared form so that every comparison happens in
// an integer series ring.  Check names record the progression, modulus and
// range actually tested.

#include "qv0/congruence.hpp"
#include "qv0/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qv0::suites {

// Classical two-variable theta identities, the Jacobi triple product over a
// monomial grid, sum-vs-product forms, and the cleared quadratic relations
// that drive the recurrence matrices.
Report preliminary_identities(std::size_t order = 500);

// Huffing images of the quotient families over all four recurrence bases,
// plus the closed forms of the v0 subsequences on 8n+4, 16n+4 and 32n+4.
Report huffing_images(std::size_t order = 300);

// Base-table rows against their displayed values, derived-matrix seeds, and
// the coefficient vectors x2, x3 entry for entry (support included).
Report matrix_fidelity();

// 2-adic lower bounds for all three base tables and the vector tower, with
// equality asserted exactly where it is provable.
Report valuation_bounds();

// Generating-function identities for extracted v0 subsequences: the exact
// closed forms, the induction tower over the coefficient vectors, and the
// mod 13 / 25 / 27 reductions.
Report genfun_identities(congruence::V0ModCache& cache, std::size_t order = 300,
                         std::size_t tower_order = 100, std::size_t mod27_order = 200);

// Prime dissections of psi and f(q, q^2) and the triangular-coefficient
// consequences.
Report dissections(std::size_t psi_order = 500, std::size_t f12_order = 600,
                   std::size_t tri_limit = 500);

std::vector<std::string> suite_names();

// Runs one named suite: "identities", "matrices", "valuations",
// "dissections", a theorem-family name (T2 ... Closing), or "all".  When an
// order is supplied it replaces the default comparison order of the
// identity-style suites; theorem suites have pinned ranges and ignore it.
Report run_named(const std::string& name, congruence::V0ModCache& cache,
                 std::optional<std::size_t> order = std::nullopt);

}  // namespace qv0::suites
