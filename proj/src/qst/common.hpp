/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QSTBENCH_COMMON_HPP
#define QSTBENCH_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qst {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Error categories shared with the public C API (see include/qstbench.h).
enum class ErrorCode : int {
  InvalidArgument = 1,
  DimensionMismatch = 2,
  UnsupportedQubitCount = 3,
  OutOfRange = 4,
  NotPositiveDefinite = 5,
  DegenerateAlpha = 6,
  NonUnitaryBlock = 7,
  NotHermitian = 8,
  DegenerateDesign = 9,
  ZeroProbability = 10,
  ShapeMismatch = 11,
  NonFiniteLoss = 12,
  Io = 13,
  FormatVersionMismatch = 14,
  MissingModel = 15,
  Config = 16,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Number of qubits; the workbench supports n = 2 and n = 3 only.
class QubitCount {
 public:
  explicit QubitCount(int n) : n_(n) {
    if (n != 2 && n != 3)
      throw Error(ErrorCode::UnsupportedQubitCount,
                  "qubit count must be 2 or 3, got " + std::to_string(n));
  }
  int n() const { return n_; }
  int dim() const { return 1 << n_; }

 private:
  int n_;
};

inline void check_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix must be square");
}

inline void check_same_dim(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
}

}  // namespace qst

#endif  // QSTBENCH_COMMON_HPP
