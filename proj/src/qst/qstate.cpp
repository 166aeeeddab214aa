/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qst/qstate.hpp"

#include <cmath>

#include "qst/measure.hpp"

namespace qst {

namespace {

constexpr double kEigClamp = 1e-12;

Eigen::SelfAdjointEigenSolver<CMatrix> hermitian_eig(const CMatrix& m) {
  // Symmetrize first; accumulated floating-point asymmetry would otherwise
  // leak into the eigenvectors.
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::InvalidArgument, "eigendecomposition failed");
  return es;
}

CMatrix psd_sqrt(const CMatrix& m) {
  auto es = hermitian_eig(m);
  RVector vals = es.eigenvalues();
  for (int i = 0; i < vals.size(); ++i)
    vals[i] = vals[i] < kEigClamp ? 0.0 : std::sqrt(vals[i]);
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

CMatrix haar_random_unitary(int dim, RandomEngine& rng) {
  if (dim < 2)
    throw Error(ErrorCode::OutOfRange, "unitary dimension must be >= 2");
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix ginibre(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      ginibre(i, j) = Cplx(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(ginibre);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Normalizing the R-diagonal phases makes the distribution exactly Haar.
  for (int j = 0; j < dim; ++j) {
    Cplx rjj = r(j, j);
    Cplx phase = std::abs(rjj) > 0 ? rjj / std::abs(rjj) : Cplx(1, 0);
    q.col(j) *= phase;
  }
  return q;
}

CVector random_pure_state(QubitCount n, RandomEngine& rng) {
  // U_haar |0...0> is the first column of U_haar.
  return haar_random_unitary(n.dim(), rng).col(0);
}

CMatrix pure_to_density(const CVector& psi) { return psi * psi.adjoint(); }

CMatrix mixed_state(const CVector& psi, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw Error(ErrorCode::OutOfRange, "mixing ratio p must lie in (0,1)");
  const int d = static_cast<int>(psi.size());
  return p * pure_to_density(psi) + ((1.0 - p) / d) * CMatrix::Identity(d, d);
}

CMatrix perturb_pure(const CVector& psi, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1e-3))
    throw Error(ErrorCode::OutOfRange, "epsilon must lie in (0, 1e-3)");
  const int d = static_cast<int>(psi.size());
  return (1.0 - epsilon) * pure_to_density(psi) +
         (epsilon / d) * CMatrix::Identity(d, d);
}

CMatrix cholesky_decompose(const CMatrix& rho) {
  check_square(rho, "cholesky_decompose");
  const int d = static_cast<int>(rho.rows());
  CMatrix lower = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    double pivot = rho(j, j).real();
    for (int k = 0; k < j; ++k) pivot -= std::norm(lower(j, k));
    if (pivot < -1e-10)
      throw Error(ErrorCode::NotPositiveDefinite,
                  "pivot " + std::to_string(pivot) + " below -1e-10 at column " +
                      std::to_string(j));
    pivot = pivot < 0.0 ? 0.0 : pivot;
    const double ljj = std::sqrt(pivot);
    lower(j, j) = ljj;
    for (int i = j + 1; i < d; ++i) {
      Cplx s = rho(i, j);
      for (int k = 0; k < j; ++k) s -= lower(i, k) * std::conj(lower(j, k));
      lower(i, j) = ljj > 0.0 ? s / ljj : Cplx(0, 0);
    }
  }
  return lower;
}

RVector alpha_encode(const CMatrix& lower) {
  check_square(lower, "alpha_encode");
  const int d = static_cast<int>(lower.rows());
  RVector alpha(d * d);
  for (int i = 0; i < d; ++i) alpha[i] = lower(i, i).real();
  int k = d;
  for (int i = 1; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      alpha[k++] = lower(i, j).real();
      alpha[k++] = lower(i, j).imag();
    }
  return alpha;
}

CMatrix alpha_decode(const RVector& alpha) {
  const auto len = alpha.size();
  const int d = static_cast<int>(std::lround(std::sqrt(double(len))));
  if (static_cast<Eigen::Index>(d) * d != len)
    throw Error(ErrorCode::ShapeMismatch,
                "alpha length " + std::to_string(len) + " is not a square");
  CMatrix lower = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) lower(i, i) = alpha[i];
  int k = d;
  for (int i = 1; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      lower(i, j) = Cplx(alpha[k], alpha[k + 1]);
      k += 2;
    }
  return lower;
}

CMatrix alpha_to_density(const RVector& alpha) {
  CMatrix lower = alpha_decode(alpha);
  CMatrix m = lower * lower.adjoint();
  const double tr = m.trace().real();
  if (tr <= 1e-30)
    throw Error(ErrorCode::DegenerateAlpha,
                "alpha vector maps to a matrix with vanishing trace");
  return m / tr;
}

double fidelity(const CMatrix& rho, const CMatrix& sigma) {
  check_square(rho, "fidelity");
  check_same_dim(rho, sigma);
  CMatrix root = psd_sqrt(rho);
  auto es = hermitian_eig(root * sigma * root);
  double f = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()[i];
    if (v > kEigClamp) f += std::sqrt(v);
  }
  return std::min(1.0, std::max(0.0, f));
}

double purity(const CMatrix& rho) { return (rho * rho).trace().real(); }

bool is_density_matrix(const CMatrix& rho, double tol) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    return false;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (rho + rho.adjoint()));
  return es.eigenvalues().minCoeff() >= -tol;
}

CMatrix build_optical_unitary(const OpticalGateParams& params) {
  const CMatrix* blocks[] = {&params.v1, &params.v2, &params.vr, &params.vl};
  const char* names[] = {"V1", "V2", "VR", "VL"};
  for (int b = 0; b < 4; ++b) {
    const CMatrix& v = *blocks[b];
    if (v.rows() != 2 || v.cols() != 2)
      throw Error(ErrorCode::NonUnitaryBlock,
                  std::string(names[b]) + " must be 2x2");
    if (((v * v.adjoint()) - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() > 1e-10)
      throw Error(ErrorCode::NonUnitaryBlock,
                  std::string(names[b]) + " is not unitary within 1e-10");
  }
  const Cplx i_unit(0, 1);
  CMatrix sum = params.vr + params.vl;
  CMatrix diff = params.vr - params.vl;
  CMatrix u(4, 4);
  u.block<2, 2>(0, 0) = 0.5 * params.v2 * sum * params.v1;
  u.block<2, 2>(0, 2) = -0.5 * i_unit * params.v2 * diff;
  u.block<2, 2>(2, 0) = 0.5 * i_unit * diff * params.v1;
  u.block<2, 2>(2, 2) = 0.5 * sum;
  return u;
}

std::vector<CMatrix> optical_state_family(const std::vector<CMatrix>& basis_states,
                                          int gates_per_state, RandomEngine& rng) {
  if (gates_per_state < 0)
    throw Error(ErrorCode::OutOfRange, "gates_per_state must be >= 0");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  auto random_block = [&] {
    const double t1 = angle(rng), t2 = angle(rng), t3 = angle(rng);
    return rotation_unitary(t1, t2, t3);
  };
  std::vector<CMatrix> out;
  out.reserve(basis_states.size() * (1 + gates_per_state));
  for (const CMatrix& rho : basis_states) {
    if (rho.rows() != 4 || rho.cols() != 4)
      throw Error(ErrorCode::DimensionMismatch,
                  "optical basis states must be 4x4 (2-qubit)");
    out.push_back(rho);
    for (int g = 0; g < gates_per_state; ++g) {
      OpticalGateParams p{random_block(), random_block(), random_block(),
                          random_block()};
      CMatrix u = build_optical_unitary(p);
      out.push_back(u * rho * u.adjoint());
    }
  }
  return out;
}

}  // namespace qst
