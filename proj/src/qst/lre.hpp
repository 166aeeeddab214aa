/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QSTBENCH_LRE_HPP
#define QSTBENCH_LRE_HPP

#include "qst/common.hpp"
#include "qst/measure.hpp"

namespace qst {

/// Linear model relating a Hermitian operator's real basis coordinates to the
/// Born probabilities of a suite.  Rows: one per projector in suite order,
/// plus one trace-constraint row weighted kTraceWeight.  Columns: d diagonal
/// coordinates, then (symmetric, antisymmetric) pairs for each upper pair
/// (i < j) in row-major order.  The pseudoinverse (singular values below
/// 1e-10 relative cut dropped) is cached so repeated estimates are a single
/// matrix-vector product.
class DesignMatrix {
 public:
  static constexpr double kTraceWeight = 1e3;

  explicit DesignMatrix(const MeasurementSuite& suite);

  int dim() const { return dim_; }
  int rows() const { return static_cast<int>(design_.rows()); }
  int cols() const { return static_cast<int>(design_.cols()); }
  int rank() const { return rank_; }
  const RMatrix& matrix() const { return design_; }

  /// Minimum-norm least-squares Hermitian solve for the given frequencies
  /// (without the physicality projection).
  CMatrix solve(const RVector& freq) const;

 private:
  int dim_;
  int rank_;
  RMatrix design_;   // includes the weighted trace row (last)
  RMatrix pinv_;
};

/// Frobenius-nearest density matrix to a Hermitian, unit-trace operator:
/// eigendecompose, project the spectrum onto the probability simplex by the
/// sorted water-filling rule (zero the most negative eigenvalue, spread its
/// mass uniformly over the rest, repeat), reassemble.  Idempotent on valid
/// density matrices.
CMatrix project_to_physical(const CMatrix& hermitian);

/// Least-squares estimate followed by physical projection; always returns a
/// valid density matrix.
CMatrix lre_estimate(const RVector& freq, const DesignMatrix& design);
CMatrix lre_estimate(const RVector& freq, const MeasurementSuite& suite);

}  // namespace qst

#endif  // QSTBENCH_LRE_HPP
