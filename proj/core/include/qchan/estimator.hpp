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
#include <cstdint>
#include <optional>
#include <vector>

#include "qchan/coefficients.hpp"
#include "qchan/random_states.hpp"

namespace qchan {

/// Real coordinates of ψ ∈ C^{d²}; the state is tr₂|ψ⟩⟨ψ| = ΨΨ†/‖ψ‖² with
/// Ψ the d×d reshaping of ψ (row = system, column = ancilla).
class PurificationVector {
 public:
  /// Normalises v; throws kBadParam if v has the wrong length or is zero.
  static PurificationVector from(std::size_t dim, const RealVector& v);
  static PurificationVector random(std::size_t dim, Rng& rng);
  /// Purification of |k⟩⟨k|.
  static PurificationVector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return dim_; }
  const RealVector& coords() const noexcept { return v_; }
  DensityMatrix state() const;

 private:
  PurificationVector(std::size_t dim, RealVector v) : dim_(dim), v_(std::move(v)) {}
  std::size_t dim_;
  RealVector v_;
};

/// ρ from unnormalised purification coordinates.
DensityMatrix state_from_coords(std::size_t dim, const RealVector& v);

enum class OptimizeMode { kMax, kMin };

struct OptimizerConfig {
  std::size_t restarts = 50;
  std::size_t max_iters = 2000;
  std::uint64_t seed = 0;
  double simplex_tol = 1e-10;
  double ratio_guard = 1e-10;
  OptimizeMode mode = OptimizeMode::kMax;
  /// Worker threads; results do not depend on it.
  std::size_t jobs = 1;
  SupportPolicy policy;
};

/// D(N(ρ)||N(σ)) / D(M(ρ)||M(σ)), or nullopt when the denominator is below
/// the guard or either divergence is infinite.
std::optional<double> objective_ratio(const Channel& n, const Channel& m, const DensityMatrix& rho,
                                      const DensityMatrix& sigma, const OptimizerConfig& cfg);
std::optional<double> objective_ratio(const Channel& n, const Channel& m,
                                      const PurificationVector& v1, const PurificationVector& v2,
                                      const OptimizerConfig& cfg);

/// Multi-start Nelder–Mead over (v₁, v₂) ∈ R^{4d²}. kMax gives a lower
/// estimate of η_{N,M} (lo = value, hi = ∞); kMin gives an upper estimate
/// of η̌_{N,M} (lo = 0, hi = value). One tenth of the restarts start near
/// basis pure states, beginning with |d−1⟩.
CoefficientEstimate estimate_coefficient(const Channel& n, const Channel& m,
                                         const OptimizerConfig& cfg);

/// Eigenvalues above cutoff·λmax; throws kNotPSD on a non-PSD argument.
std::size_t support_dim(const ComplexMatrix& m, const SupportPolicy& policy = {});

struct NogoWitness {
  DensityMatrix rho;
  DensityMatrix sigma;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  /// Rank of ρ (0 for the replacer shortcut).
  std::size_t k0 = 0;
};

/// Witness pair showing η̌_N = 0 for a non-unitary channel with
/// dim_in ≥ dim_out: ρ = P_{k0}/k0 and σ_ε = (1−ε)ρ + ε|φ_{k0+1}⟩⟨φ_{k0+1}|
/// along a chain of subspaces that starts at a pure input with mixed output.
/// A replacer yields ratio 0 directly; other purity-preserving channels
/// throw kPurityPreserving.
NogoWitness nogo_witness(const Channel& ch, double eps, std::uint64_t seed = 0);

struct NogoReport {
  enum class Outcome { kLadder, kUnitary, kReplacer };
  Outcome outcome = Outcome::kLadder;
  /// 1 for unitaries; otherwise the smallest ladder ratio (an upper
  /// estimate of η̌ = 0).
  double expansion = 0.0;
  std::vector<double> eps;
  std::vector<double> ratios;
};

NogoReport nogo_report(const Channel& ch, const std::vector<double>& eps_ladder,
                       std::uint64_t seed = 0);

}  // namespace qchan
