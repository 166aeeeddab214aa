/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QSTBENCH_QSTATE_HPP
#define QSTBENCH_QSTATE_HPP

#include <vector>

#include "qst/common.hpp"
#include "qst/rng.hpp"

namespace qst {

// ---------------------------------------------------------------------------
// State generation
// ---------------------------------------------------------------------------

/// Haar-distributed random unitary (complex Ginibre matrix, QR-decomposed,
/// R-diagonal phases absorbed into Q so the measure is exact).
CMatrix haar_random_unitary(int dim, RandomEngine& rng);

/// Haar-random pure state: U_haar applied to |0...0>.
CVector random_pure_state(QubitCount n, RandomEngine& rng);

/// Rank-1 projector |psi><psi| of a unit vector.
CMatrix pure_to_density(const CVector& psi);

/// Convex combination p |psi><psi| + (1-p) I/d with p in (0,1).
CMatrix mixed_state(const CVector& psi, double p);

/// Full-rank perturbation (1-eps)|psi><psi| + (eps/d) I, eps in (0, 1e-3).
CMatrix perturb_pure(const CVector& psi, double epsilon = 1e-7);

// ---------------------------------------------------------------------------
// Cholesky factor and alpha-vector codec
// ---------------------------------------------------------------------------

/// Lower-triangular L with L L^dagger = rho.  Pivots below -1e-10 raise
/// NotPositiveDefinite; pivots in [-1e-10, 0] are clamped to zero, so
/// positive-semidefinite inputs with tiny negative rounding still factor.
CMatrix cholesky_decompose(const CMatrix& rho);

/// Flattens a lower-triangular matrix into the length-d^2 real layout:
/// d diagonal entries first, then (re, im) of each strictly-lower entry in
/// row-major order (1,0),(2,0),(2,1),(3,0),...
RVector alpha_encode(const CMatrix& lower);

/// Inverse of alpha_encode.
CMatrix alpha_decode(const RVector& alpha);

/// rho = L L^dagger / Tr(L L^dagger) for L = alpha_decode(alpha).  Physical
/// for any real alpha; raises DegenerateAlpha when the trace is <= 1e-30.
CMatrix alpha_to_density(const RVector& alpha);

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

/// Uhlmann fidelity |Tr sqrt(sqrt(rho) sigma sqrt(rho))| via eigendecomposition
/// of rho, eigenvalues below 1e-12 clamped to zero before the square roots.
double fidelity(const CMatrix& rho, const CMatrix& sigma);

inline double infidelity(const CMatrix& rho, const CMatrix& sigma) {
  return 1.0 - fidelity(rho, sigma);
}

/// Tr(rho^2).
double purity(const CMatrix& rho);

/// True when Hermitian within tol, trace 1 within tol and all eigenvalues
/// >= -tol.
bool is_density_matrix(const CMatrix& rho, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Optical 2-qubit gate family
// ---------------------------------------------------------------------------

/// The four 2x2 polarization-gate blocks of a path/polarization photonic gate.
struct OpticalGateParams {
  CMatrix v1, v2, vr, vl;
};

/// Assembles the 4x4 gate
///   [ V2 (VR+VL) V1 / 2      -i V2 (VR-VL) / 2 ]
///   [  i (VR-VL) V1 / 2          (VR+VL) / 2   ]
/// which is unitary whenever all four blocks are.  Raises NonUnitaryBlock
/// when a block fails unitarity within 1e-10.
CMatrix build_optical_unitary(const OpticalGateParams& params);

/// Returns the basis states plus, for each, gates_per_state conjugations
/// U rho U^dagger with U drawn by sampling all twelve block angles uniformly
/// on [0, 2pi).  Output order: basis[0], its gated copies, basis[1], ...
std::vector<CMatrix> optical_state_family(const std::vector<CMatrix>& basis_states,
                                          int gates_per_state, RandomEngine& rng);

}  // namespace qst

#endif  // QSTBENCH_QSTATE_HPP
