// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qchan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchan/error.hpp"

namespace qchan {

double max_abs(const ComplexMatrix& m) {
  double out = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) out = std::max(out, std::abs(m.data()[i]));
  return out;
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix diff = m - m.adjoint();
  return max_abs(diff) <= tol * (1.0 + max_abs(m));
}

namespace {

ComplexMatrix checked_symmetric(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::kDimMismatch, "eigendecomposition needs a square matrix, got " +
                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!all_finite(m)) fail(ErrorCode::kNonHermitian, "matrix has non-finite entries");
  if (!is_hermitian(m)) fail(ErrorCode::kNonHermitian, "matrix fails the Hermiticity check");
  return 0.5 * (m + m.adjoint());
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& m) {
  const ComplexMatrix h = checked_symmetric(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigvals_hermitian(const ComplexMatrix& m) {
  const ComplexMatrix h = checked_symmetric(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return true;
  const RealVector lambda = eigvals_hermitian(m);
  return lambda(0) >= -tol * std::max(1.0, max_abs(m));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Keep keep) {
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  if (m.rows() != da * db || m.cols() != da * db) {
    fail(ErrorCode::kDimMismatch, "partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                                      std::to_string(m.cols()) + ", dims give " +
                                      std::to_string(da * db));
  }
  if (keep == Keep::kFirst) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j) out(i, j) = m.block(i * db, j * db, db, db).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index i = 0; i < da; ++i) out += m.block(i * db, i * db, db, db);
  return out;
}

ComplexMatrix spectral_apply(const ComplexMatrix& m, const std::function<double(double)>& f) {
  const Spectrum s = eig_hermitian(m);
  RealVector fl(s.values.size());
  for (Eigen::Index i = 0; i < fl.size(); ++i) fl(i) = f(s.values(i));
  return s.vectors * fl.cast<Complex>().asDiagonal() * s.vectors.adjoint();
}

ComplexMatrix pauli(int index) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  const Complex i{0.0, 1.0};
  switch (index) {
    case 0: p(0, 0) = 1.0; p(1, 1) = 1.0; break;
    case 1: p(0, 1) = 1.0; p(1, 0) = 1.0; break;
    case 2: p(0, 1) = -i; p(1, 0) = i; break;
    case 3: p(0, 0) = 1.0; p(1, 1) = -1.0; break;
    default: fail(ErrorCode::kBadParam, "pauli index must be in 0..3");
  }
  return p;
}

double hs_norm_sq(const ComplexMatrix& m) { return m.squaredNorm(); }

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

}  // namespace qchan
