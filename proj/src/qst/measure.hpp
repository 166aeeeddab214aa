/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QSTBENCH_MEASURE_HPP
#define QSTBENCH_MEASURE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qst/common.hpp"
#include "qst/rng.hpp"

namespace qst {

/// One simultaneously measurable basis: d mutually orthogonal rank-1
/// projectors stored as their defining unit vectors.
struct ProjectorSet {
  std::vector<CVector> vectors;
  int dim() const { return static_cast<int>(vectors.size()); }
};

enum class SuiteKind { Cube, Mub };

/// Unitary-rotation measurement noise: distribution plus the three scale
/// ratios (xi1, xi2, xi3).  All-zero ratios mean noiseless.
struct NoiseSpec {
  enum class Dist { Gaussian, Uniform };
  Dist dist = Dist::Uniform;
  std::array<double, 3> ratios{0.0, 0.0, 0.0};
  bool noiseless() const {
    return ratios[0] == 0.0 && ratios[1] == 0.0 && ratios[2] == 0.0;
  }
};

/// Per-qubit rotation angle triples (theta1, theta2, theta3).
using NoiseAngles = std::vector<std::array<double, 3>>;

struct MeasurementSuite {
  SuiteKind kind;
  QubitCount qubits;
  std::vector<ProjectorSet> sets;
  /// Present when the suite has been conjugated by a noise unitary.
  std::optional<NoiseAngles> noise;

  int dim() const { return qubits.dim(); }
  int set_count() const { return static_cast<int>(sets.size()); }
  int total_projectors() const { return set_count() * dim(); }
};

/// The six 1-qubit Pauli eigenvectors in the order H, V, D, A, R, L with
/// D = (H+V)/sqrt2, A = (H-V)/sqrt2, R = (H+iV)/sqrt2, L = (H-iV)/sqrt2.
std::array<CVector, 6> pauli_basis_states();

/// 3^n sets of tensor-product Pauli eigenbases, ordered lexicographically
/// over the per-qubit axis choice Z < X < Y (the 2-qubit order is exactly
/// ZZ, ZX, ZY, XZ, XX, XY, YZ, YX, YY).
MeasurementSuite cube_suite(QubitCount n);

/// The five 2-qubit mutually unbiased bases, two of them entangled.
MeasurementSuite mub_suite_2q();

/// Complete suite of the given kind; MUB is 2-qubit only.
MeasurementSuite make_suite(SuiteKind kind, QubitCount n);

/// First k sets of the suite, in suite order.
MeasurementSuite truncate_suite(const MeasurementSuite& suite, int k);

/// The single-qubit rotation
///   [ e^{i t1} cos t2      -i e^{i t3} sin t2 ]
///   [ -i e^{-i t3} sin t2   e^{-i t1} cos t2  ].
CMatrix rotation_unitary(double theta1, double theta2, double theta3);

/// Draws one angle triple per qubit.  Gaussian: theta1 ~ N(0, sd pi*xi1),
/// theta2, theta3 ~ N(0, sd 2pi*xi_k).  Uniform: theta1 ~ U(0, 2pi*xi1),
/// theta2 ~ U(0, 0.5pi*xi2), theta3 ~ U(0, 2pi*xi3).  Zero ratios give
/// exactly zero angles.
NoiseAngles sample_noise_angles(const NoiseSpec& spec, QubitCount n,
                                RandomEngine& rng);

/// Conjugates every projector by U_e = U(Theta_1) (x) ... (x) U(Theta_n).
/// One noise realization applies to all sets of the suite.
MeasurementSuite apply_noise(const MeasurementSuite& suite,
                             const NoiseAngles& angles);

std::string suite_kind_name(SuiteKind kind);
SuiteKind suite_kind_from_name(const std::string& name);

/// Number of sets in the complete suite (3^n for cube, 2^n + 1 for MUB).
int complete_set_count(SuiteKind kind, QubitCount n);

}  // namespace qst

#endif  // QSTBENCH_MEASURE_HPP
