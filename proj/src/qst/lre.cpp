/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qst/lre.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qst {

namespace {

// Real Hermitian element basis: H = sum_k x_k B_k with
//   B_k = E_kk                      for k < d,
//   B_s = E_ij + E_ji               (symmetric pair),
//   B_a = i(E_ij - E_ji)            (antisymmetric pair),
// pairs (i < j) in row-major order.  <m|B|m> is real for each element, so the
// regression stays real.
int coord_count(int d) { return d * d; }

void fill_row(const CVector& m, Eigen::Ref<Eigen::RowVectorXd> row) {
  const int d = static_cast<int>(m.size());
  for (int k = 0; k < d; ++k) row[k] = std::norm(m[k]);
  int c = d;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Cplx t = std::conj(m[i]) * m[j];
      row[c++] = 2.0 * t.real();
      row[c++] = -2.0 * t.imag();
    }
}

CMatrix assemble(const RVector& x, int d) {
  CMatrix h = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) h(k, k) = x[k];
  int c = d;
  const Cplx i_unit(0, 1);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double s = x[c++];
      const double a = x[c++];
      h(i, j) += s + i_unit * a;
      h(j, i) += s - i_unit * a;
    }
  return h;
}

}  // namespace

DesignMatrix::DesignMatrix(const MeasurementSuite& suite)
    : dim_(suite.dim()) {
  const int d = dim_;
  const int rows = suite.total_projectors() + 1;
  design_.resize(rows, coord_count(d));
  int r = 0;
  for (const ProjectorSet& set : suite.sets)
    for (const CVector& m : set.vectors) fill_row(m, design_.row(r++));
  // Trace constraint as a weighted row keeps the construction uniform for
  // truncated suites.
  design_.row(r).setZero();
  for (int k = 0; k < d; ++k) design_(r, k) = kTraceWeight;

  Eigen::JacobiSVD<RMatrix> svd(design_,
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  rank_ = static_cast<int>(svd.rank());
  if (rank_ < 2)
    throw Error(ErrorCode::DegenerateDesign,
                "design matrix rank " + std::to_string(rank_) + " < 2");
  RVector inv_sv = RVector::Zero(svd.singularValues().size());
  for (int i = 0; i < rank_; ++i) inv_sv[i] = 1.0 / svd.singularValues()[i];
  pinv_ = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
}

CMatrix DesignMatrix::solve(const RVector& freq) const {
  if (freq.size() + 1 != design_.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "frequency vector does not match the suite");
  RVector b(design_.rows());
  b.head(freq.size()) = freq;
  b[freq.size()] = kTraceWeight;  // trace = 1
  RVector x = pinv_ * b;
  return assemble(x, dim_);
}

CMatrix project_to_physical(const CMatrix& hermitian) {
  check_square(hermitian, "project_to_physical");
  if ((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw Error(ErrorCode::NotHermitian,
                "input deviates from Hermitian by more than 1e-8");
  if (std::abs(hermitian.trace().real() - 1.0) > 1e-8)
    throw Error(ErrorCode::NotHermitian, "input trace deviates from 1");
  const int d = static_cast<int>(hermitian.rows());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 *
                                            (hermitian + hermitian.adjoint()));
  RVector vals = es.eigenvalues();

  // Water-filling on the spectrum, largest first.
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vals[a] > vals[b]; });
  RVector sorted(d);
  for (int i = 0; i < d; ++i) sorted[i] = vals[order[i]];
  double mass = 0.0;
  int live = d;
  while (live > 0 && sorted[live - 1] + mass / live < 0.0) {
    mass += sorted[live - 1];
    sorted[live - 1] = 0.0;
    --live;
  }
  for (int i = 0; i < live; ++i) sorted[i] += mass / live;

  RVector projected(d);
  for (int i = 0; i < d; ++i) projected[order[i]] = sorted[i];
  return es.eigenvectors() * projected.asDiagonal() *
         es.eigenvectors().adjoint();
}

CMatrix lre_estimate(const RVector& freq, const DesignMatrix& design) {
  CMatrix h = design.solve(freq);
  // The weighted trace row keeps Tr(H) close to 1; normalize away the
  // residual slack before the simplex projection, which assumes unit trace.
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > 0.5)
    throw Error(ErrorCode::DegenerateDesign,
                "least-squares trace " + std::to_string(tr) +
                    " too far from 1");
  h /= tr;
  return project_to_physical(0.5 * (h + h.adjoint()));
}

CMatrix lre_estimate(const RVector& freq, const MeasurementSuite& suite) {
  return lre_estimate(freq, DesignMatrix(suite));
}

}  // namespace qst
