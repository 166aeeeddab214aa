/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qst/measure.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace qst {

namespace {

const Cplx kI(0.0, 1.0);

CVector kron2(const CVector& a, const CVector& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace

std::array<CVector, 6> pauli_basis_states() {
  const double s = 1.0 / std::sqrt(2.0);
  CVector h(2), v(2), d(2), a(2), r(2), l(2);
  h << 1, 0;
  v << 0, 1;
  d << s, s;
  a << s, -s;
  r << s, s * kI;
  l << s, -s * kI;
  return {h, v, d, a, r, l};
}

MeasurementSuite cube_suite(QubitCount n) {
  const auto pauli = pauli_basis_states();
  // Axis order Z < X < Y; each axis contributes its (+, -) eigenvector pair.
  const std::array<std::array<CVector, 2>, 3> axes = {
      std::array<CVector, 2>{pauli[0], pauli[1]},   // Z: H, V
      std::array<CVector, 2>{pauli[2], pauli[3]},   // X: D, A
      std::array<CVector, 2>{pauli[4], pauli[5]}};  // Y: R, L

  const int nq = n.n();
  const int d = n.dim();
  const int set_count = 1;
  int sets_total = set_count;
  for (int k = 0; k < nq; ++k) sets_total *= 3;

  MeasurementSuite suite{SuiteKind::Cube, n, {}, std::nullopt};
  suite.sets.reserve(sets_total);
  for (int code = 0; code < sets_total; ++code) {
    // Decode the per-qubit axis choice, qubit 1 most significant.
    std::vector<int> axis(nq);
    int c = code;
    for (int q = nq - 1; q >= 0; --q) {
      axis[q] = c % 3;
      c /= 3;
    }
    ProjectorSet set;
    set.vectors.reserve(d);
    for (int outcome = 0; outcome < d; ++outcome) {
      CVector vec(1);
      vec << 1;
      for (int q = 0; q < nq; ++q) {
        const int bit = (outcome >> (nq - 1 - q)) & 1;
        vec = kron2(vec, axes[axis[q]][bit]);
      }
      set.vectors.push_back(vec);
    }
    suite.sets.push_back(std::move(set));
  }
  return suite;
}

MeasurementSuite mub_suite_2q() {
  const auto pauli = pauli_basis_states();
  const CVector &h = pauli[0], &v = pauli[1], &d = pauli[2], &a = pauli[3],
                &r = pauli[4], &l = pauli[5];
  const double s = 1.0 / std::sqrt(2.0);

  MeasurementSuite suite{SuiteKind::Mub, QubitCount(2), {}, std::nullopt};
  suite.sets.resize(5);
  suite.sets[0].vectors = {kron2(h, h), kron2(h, v), kron2(v, h), kron2(v, v)};
  suite.sets[1].vectors = {kron2(r, d), kron2(r, a), kron2(l, d), kron2(l, a)};
  suite.sets[2].vectors = {kron2(d, r), kron2(d, l), kron2(a, r), kron2(a, l)};
  // The two entangled bases; each pairs a +i and a -i superposition.
  suite.sets[3].vectors = {
      (s * (kron2(r, l) + kI * kron2(l, r))).eval(),
      (s * (kron2(r, l) - kI * kron2(l, r))).eval(),
      (s * (kron2(r, r) + kI * kron2(l, l))).eval(),
      (s * (kron2(r, r) - kI * kron2(l, l))).eval()};
  suite.sets[4].vectors = {
      (s * (kron2(r, v) + kI * kron2(l, h))).eval(),
      (s * (kron2(r, v) - kI * kron2(l, h))).eval(),
      (s * (kron2(r, h) + kI * kron2(l, v))).eval(),
      (s * (kron2(r, h) - kI * kron2(l, v))).eval()};
  return suite;
}

MeasurementSuite make_suite(SuiteKind kind, QubitCount n) {
  if (kind == SuiteKind::Cube) return cube_suite(n);
  if (n.n() != 2)
    throw Error(ErrorCode::UnsupportedQubitCount,
                "MUB suites are available for 2 qubits only");
  return mub_suite_2q();
}

MeasurementSuite truncate_suite(const MeasurementSuite& suite, int k) {
  if (k < 1 || k > suite.set_count())
    throw Error(ErrorCode::OutOfRange,
                "set count " + std::to_string(k) + " outside [1, " +
                    std::to_string(suite.set_count()) + "]");
  MeasurementSuite out{suite.kind, suite.qubits, {}, suite.noise};
  out.sets.assign(suite.sets.begin(), suite.sets.begin() + k);
  return out;
}

CMatrix rotation_unitary(double theta1, double theta2, double theta3) {
  const double c = std::cos(theta2), s = std::sin(theta2);
  CMatrix u(2, 2);
  u(0, 0) = std::exp(kI * theta1) * c;
  u(0, 1) = -kI * std::exp(kI * theta3) * s;
  u(1, 0) = -kI * std::exp(-kI * theta3) * s;
  u(1, 1) = std::exp(-kI * theta1) * c;
  return u;
}

NoiseAngles sample_noise_angles(const NoiseSpec& spec, QubitCount n,
                                RandomEngine& rng) {
  for (double xi : spec.ratios)
    if (xi < 0.0)
      throw Error(ErrorCode::OutOfRange, "noise ratios must be >= 0");
  NoiseAngles angles(n.n());
  // The second Gaussian parameter is a standard deviation, not a variance.
  const std::array<double, 3> scale =
      spec.dist == NoiseSpec::Dist::Gaussian
          ? std::array<double, 3>{M_PI * spec.ratios[0], 2.0 * M_PI * spec.ratios[1],
                                  2.0 * M_PI * spec.ratios[2]}
          : std::array<double, 3>{2.0 * M_PI * spec.ratios[0],
                                  0.5 * M_PI * spec.ratios[1],
                                  2.0 * M_PI * spec.ratios[2]};
  for (auto& triple : angles)
    for (int k = 0; k < 3; ++k) {
      if (scale[k] == 0.0) {
        triple[k] = 0.0;
      } else if (spec.dist == NoiseSpec::Dist::Gaussian) {
        triple[k] = std::normal_distribution<double>(0.0, scale[k])(rng);
      } else {
        triple[k] = std::uniform_real_distribution<double>(0.0, scale[k])(rng);
      }
    }
  return angles;
}

MeasurementSuite apply_noise(const MeasurementSuite& suite,
                             const NoiseAngles& angles) {
  if (static_cast<int>(angles.size()) != suite.qubits.n())
    throw Error(ErrorCode::DimensionMismatch,
                "need one angle triple per qubit");
  CMatrix u_e = rotation_unitary(angles[0][0], angles[0][1], angles[0][2]);
  for (std::size_t q = 1; q < angles.size(); ++q)
    u_e = Eigen::kroneckerProduct(
              u_e, rotation_unitary(angles[q][0], angles[q][1], angles[q][2]))
              .eval();
  MeasurementSuite out{suite.kind, suite.qubits, {}, angles};
  out.sets.reserve(suite.sets.size());
  for (const ProjectorSet& set : suite.sets) {
    ProjectorSet noisy;
    noisy.vectors.reserve(set.vectors.size());
    for (const CVector& m : set.vectors) noisy.vectors.push_back(u_e * m);
    out.sets.push_back(std::move(noisy));
  }
  return out;
}

std::string suite_kind_name(SuiteKind kind) {
  return kind == SuiteKind::Cube ? "cube" : "mub";
}

SuiteKind suite_kind_from_name(const std::string& name) {
  if (name == "cube") return SuiteKind::Cube;
  if (name == "mub") return SuiteKind::Mub;
  throw Error(ErrorCode::Config, "unknown suite kind '" + name + "'");
}

int complete_set_count(SuiteKind kind, QubitCount n) {
  if (kind == SuiteKind::Cube) {
    int c = 1;
    for (int k = 0; k < n.n(); ++k) c *= 3;
    return c;
  }
  return n.dim() + 1;
}

}  // namespace qst
