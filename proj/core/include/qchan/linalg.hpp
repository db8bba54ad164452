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

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace qchan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kReconstructTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascend; the
/// columns of `vectors` are the matching orthonormal eigenvectors.
struct Spectrum {
  RealVector values;
  ComplexMatrix vectors;
};

enum class Keep { kFirst, kSecond };

double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// ‖M − M†‖_max ≤ tol · (1 + ‖M‖_max)
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Throws kNonHermitian when the symmetry check fails. The input is
/// symmetrised before decomposition so results depend only on its bits.
Spectrum eig_hermitian(const ComplexMatrix& m);
RealVector eigvals_hermitian(const ComplexMatrix& m);

/// True iff λ_min ≥ −tol · max(1, ‖M‖_max).
bool is_psd(const ComplexMatrix& m, double tol = kPsdTol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out one tensor factor of a (dA·dB)-square operator on A⊗B and
/// returns the operator on the kept factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Keep keep);

/// U f(Λ) U† for a Hermitian argument.
ComplexMatrix spectral_apply(const ComplexMatrix& m, const std::function<double(double)>& f);

/// σ_0 = I, σ_1 = X, σ_2 = Y, σ_3 = Z (standard phase convention).
ComplexMatrix pauli(int index);

/// Hilbert–Schmidt ‖M‖₂² = tr(M†M).
double hs_norm_sq(const ComplexMatrix& m);

ComplexMatrix dagger(const ComplexMatrix& m);

}  // namespace qchan
