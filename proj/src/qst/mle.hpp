/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QSTBENCH_MLE_HPP
#define QSTBENCH_MLE_HPP

#include "qst/common.hpp"
#include "qst/measure.hpp"

namespace qst {

struct MleConfig {
  /// Stop once the infidelity between two successive iterates falls below
  /// this gap.
  double stop_gap = 1e-8;
  int max_iters = 20000;
  /// Step scale in (0, 1]; 1 means plain R rho R iterations, smaller values
  /// always use the diluted step (I + eps R) rho (I + eps R) / norm.
  double diluted_step = 1.0;
};

struct MleResult {
  CMatrix rho;
  int iterations = 0;
  bool converged = false;
};

/// Iterative maximum-likelihood reconstruction.  R(rho) = sum_i (f_i/p_i) P_i
/// over all projectors with nonzero frequency; iterates start at I/d and the
/// log-likelihood of accepted iterates never decreases (a step that would
/// decrease it is replaced by a diluted step with eps = 0.1, shrinking
/// further if needed).  Deterministic: no internal randomness.
MleResult mle_estimate(const RVector& freq, const MeasurementSuite& suite,
                       const MleConfig& cfg = {});

}  // namespace qst

#endif  // QSTBENCH_MLE_HPP
