#pragma once

#include <vector>

#include "ll/graded.hpp"
#include "ll/numeric_spectrum.hpp"
#include "ll/report.hpp"
#include "ll/wavefunctions.hpp"

namespace ll::checks {

/// Base and extended gamma relations: abstract blade algebra, the 2x2
/// representation, and the cross-module identification of the d = 1
/// Clifford construction with the blade table.
std::vector<CheckResult> gamma_relations(const BladeTable& table = BladeTable::standard());

/// The complete free-equation commutation table and the harmonic operator
/// relations, as exact normal-form identities.
std::vector<CheckResult> relation_tables(const BladeTable& table = BladeTable::standard());

/// Closure and colour Jacobi for one algebra, plus the named extras
/// (vanishing brackets for A, ladder decompositions for L).
std::vector<CheckResult> algebra(const AlgebraSpec& spec);

/// Closed-form solutions of the coefficient ODE and the exponential
/// eigenvalue-condition operators.
std::vector<CheckResult> coefficient_ode();

/// Plane-wave eigenstates, simultaneous-eigenstate decomposition and the
/// orthonormality coefficient.  k_wave may be symbolic or an exact rational.
std::vector<CheckResult> free_solutions(const ScalarSum& k_wave);

/// Harmonic ladder: vacuum construction, b|0> = 0, eigen-residuals up to
/// level n, and the nearly idempotent combination beta + c.
std::vector<CheckResult> harmonic_solutions(int max_level);

/// Desk-scale finite-difference verification.
std::vector<CheckResult> numeric_spectrum(double beta, double k, const Grid& g, int count);

/// Chirality element and the constructed gammas for one d.
std::vector<CheckResult> clifford_construction(int d);

}  // namespace ll::checks
