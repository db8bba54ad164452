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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "qchan/linalg.hpp"

namespace qchan {

/// Positive semidefinite, unit-trace Hermitian matrix.
class DensityMatrix {
 public:
  /// Validates trace (1e−10), Hermiticity and λ_min ≥ −1e−10. Throws kNotPSD
  /// or kNonHermitian on failure.
  static DensityMatrix from_matrix(const ComplexMatrix& m, double tol = kReconstructTol);
  /// For values already known to be states (channel outputs, convex
  /// mixtures). Only symmetrises.
  static DensityMatrix assume_valid(const ComplexMatrix& m);

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix basis(std::size_t dim, std::size_t index);
  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix diagonal(std::span<const double> probabilities);
  static DensityMatrix diagonal(std::initializer_list<double> probabilities);
  /// ½(I + w·σ); throws kBadBloch if |w| > 1 + 1e−9.
  static DensityMatrix bloch(const Vec3& w);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  /// Qubit only.
  Vec3 bloch_vector() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// (1 − t)·a + t·b
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double t);

/// CPTP map in Kraus form; immutable after construction.
class Channel {
 public:
  /// All operators must be dim_out × dim_in and satisfy Σ A†A = I within tol.
  static Channel from_kraus(std::vector<ComplexMatrix> kraus, double tol = kReconstructTol);

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  /// Linear extension to arbitrary operators.
  ComplexMatrix apply(const ComplexMatrix& x) const;
  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  Channel(std::size_t din, std::size_t dout, std::vector<ComplexMatrix> kraus)
      : dim_in_(din), dim_out_(dout), kraus_(std::move(kraus)) {}

  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> kraus_;
};

/// Qubit channel in Bloch form: N(½(I + w·σ)) = ½(I + (T w + t)·σ).
struct AffineRep {
  Mat3 T;
  Vec3 t;

  Vec3 image(const Vec3& w) const { return T * w + t; }
};

/// Unit-diagonal PSD Hadamard multiplier of a generalised dephasing channel.
class DephasingSpec {
 public:
  /// Requires a real symmetric matrix, Γ_ii = 1, Γ_ij ∈ [0,1] (kBadParam)
  /// and Γ ⪰ 0 within 1e−10 (kNotPSD).
  static DephasingSpec from_matrix(const ComplexMatrix& gamma);
  /// Γ_p = [[1, 1−p], [1−p, 1]], p ∈ [0, 2].
  static DephasingSpec qubit(double p);

  const ComplexMatrix& gamma() const noexcept { return gamma_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(gamma_.rows()); }

 private:
  explicit DephasingSpec(ComplexMatrix g) : gamma_(std::move(g)) {}
  ComplexMatrix gamma_;
};

/// C_N = Σ_ij |i⟩⟨j| ⊗ N(|i⟩⟨j|), input factor first; tr_out C_N = I_in.
ComplexMatrix choi(const Channel& ch);

/// Environment dimension equals the stored Kraus count.
Channel complementary(const Channel& ch);

/// c·C_a ⪯ C_b in PSD order.
bool cp_leq(const Channel& a, const Channel& b, double c);

AffineRep to_affine(const Channel& ch);

/// outer ∘ inner
Channel compose(const Channel& outer, const Channel& inner);

/// Choi-rank 1 with equal input and output dimension.
bool is_unitary_channel(const Channel& ch);

Channel make_identity(std::size_t dim);
Channel make_unitary(const ComplexMatrix& u);
Channel make_depolarizing(std::size_t dim, double p);
Channel make_dephasing(const DephasingSpec& spec);
Channel make_qubit_dephasing(double p);
Channel make_amplitude_damping(double gamma);
/// p|0⟩⟨0| ⊗ a + (1−p)|1⟩⟨1| ⊗ b with both blocks padded to the larger output.
Channel make_flagged_mixture(double p, const Channel& a, const Channel& b);
/// (1−ν)ρ ⊕ ν|e⟩⟨e| on C^{d+1}; the erasure flag is the last basis vector.
Channel make_erasure(double nu, std::size_t dim);
/// ρ ↦ tr(ρ)|φ⟩⟨φ|
Channel make_replacer(const ComplexVector& phi, std::size_t dim_in);

}  // namespace qchan
