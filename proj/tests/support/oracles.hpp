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

#pragma once

// Naive reference implementations used as independent oracles.

#include <cmath>
#include <cstddef>
#include <vector>

#include "qchan/linalg.hpp"

namespace qchan::testing {

// tr_B by explicit index loops.
inline ComplexMatrix naive_trace_b(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(da));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        out(i, j) += m(i * db + k, j * db + k);
  return out;
}

inline ComplexMatrix naive_trace_a(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(db), static_cast<Eigen::Index>(db));
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < da; ++i)
        out(k, l) += m(i * db + k, i * db + l);
  return out;
}

inline ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Classical KL divergence in nats.
inline double scalar_kl(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return INFINITY;
    s += p[i] * std::log(p[i] / q[i]);
  }
  return s;
}

inline double scalar_entropy(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

// Matrix logarithm of a positive definite matrix through Eigen's solver,
// independent of the library's eigen wrapper.
inline ComplexMatrix logm_pd(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  const Eigen::VectorXd l = es.eigenvalues().array().log();
  return es.eigenvectors() * l.asDiagonal() * es.eigenvectors().adjoint();
}

// tr ρ(log ρ − log σ) for full-rank arguments.
inline double umegaki_full_rank(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return (rho * (logm_pd(rho) - logm_pd(sigma))).trace().real();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qchan::testing
