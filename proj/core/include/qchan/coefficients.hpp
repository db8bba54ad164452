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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/divergences.hpp"

namespace qchan {

enum class EstimateKind { kExactClosedForm, kBoundPair, kConjectured, kNumerical };

std::string_view to_string(EstimateKind kind);

/// Record of a multi-start optimisation.
struct OptimizerRun {
  double best_value = 0.0;
  std::optional<DensityMatrix> best_rho;
  std::optional<DensityMatrix> best_sigma;
  std::vector<double> restart_values;
  std::vector<bool> converged;
  std::uint64_t seed = 0;
  bool maximize = true;
};

struct CoefficientEstimate {
  EstimateKind kind = EstimateKind::kExactClosedForm;
  /// Absent for pure intervals.
  std::optional<double> value;
  double lo = 0.0;
  double hi = kInfinity;
  std::string source;
  std::optional<OptimizerRun> meta;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

/// Bounds on η_{D_{p₁}, D_{p₂}} for d-dimensional depolarizing channels,
/// 0 ≤ p₂ ≤ p₁ < 1.
CoefficientEstimate depol_relative_bounds(std::size_t d, double p1, double p2);

struct ContractionExpansion {
  CoefficientEstimate contraction;
  CoefficientEstimate expansion;
};

/// Exact η and η̌ for the pair (D_{p₁}, D_{p₂}) of qubit depolarizing
/// channels. With A = ((1−p₁)/(1−p₂))² and B = p₂(2−p₂)/(p₁(2−p₁)),
/// η = A·max(1, B) and η̌ = A·min(1, B); for p₂ ≤ p₁ this is η = A, η̌ = AB.
ContractionExpansion depol_qubit_exact(double p1, double p2);

struct PositiveBound {
  Interval bound;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double divergence = 0.0;
  bool contains = false;
};

/// Encloses D(M(ρ)||M(σ)) in [½‖M(ρ−σ)‖₂²/λmax, ½‖M(ρ−σ)‖₂²/λmin], where
/// λmin/λmax are extreme output eigenvalues over a probe set of pure inputs
/// together with ρ and σ. Throws kNotStrictlyPositive if an output is
/// (numerically) singular.
PositiveBound strictly_positive_bounds(const Channel& ch, const DensityMatrix& rho,
                                       const DensityMatrix& sigma);

/// Lower bound on η̌_{Φ_Γ′, Φ_Γ} when (1−ε)Γ ⪯ Γ′ ⪯ (1+ε)Γ and the
/// normalised matrix Γ̂ is PSD. Throws kAssumptionFailed naming every
/// hypothesis that does not hold.
CoefficientEstimate dephasing_cp_expansion_bound(const DephasingSpec& gamma,
                                                 const DephasingSpec& gamma_prime, double eps);

/// (1−2ε)(1−ε)/(1 + cε(1−ε))
double lemma_comparison_dephasing_bound(double eps, double c);

/// c₁ ≥ c₂ bound |T₂y|/|T₁y|, c₃ ≥ c₄ bound (1−|w₂|²)/(1−|w₁|²) and
/// c₅ ≥ c₆ bound f̃₂/f̃₁ for the pair (N, M) ↔ (T₁, T₂).
struct QubitConstants {
  std::array<double, 6> c{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};

  /// Constants of the swapped pair (M, N).
  QubitConstants swapped() const;
};

struct QubitBounds {
  double eta_upper = 0.0;
  double expansion_lower = 0.0;
};

/// η_{N,M} ≤ c₃/(c₂²c₆), η̌_{N,M} ≥ c₄/(c₁²c₅).
QubitBounds qubit_general_bounds(const QubitConstants& k);

/// Empirical extremes of the three ratios over w in a grid³ cube clipped to
/// the Bloch ball and 2·grid² directions y; points where a denominator
/// underflows are skipped.
QubitConstants estimate_qubit_condition_constants(const AffineRep& n, const AffineRep& m,
                                                  std::size_t grid);

struct TraceContraction {
  double eta_tr = 0.0;
  Interval entropy_sandwich;
};

/// η^tr(A_γ) = √(1−γ) and the implied [1−γ, √(1−γ)] for η(A_γ).
TraceContraction ampdamp_trace_contraction(double gamma);

/// γ₂(1−γ₁)/(γ₁(1−γ₂)), conjectured value of η̌_{A_γ₁, A_γ₂}.
CoefficientEstimate ampdamp_expansion_conjecture(double g1, double g2);

/// (1−γ₁)/(1−γ₂)·max_p K((1−γ₁)p)/K((1−γ₂)p) with K(a) = k(1−a, a), the
/// BKM kernel, so the removable singularity at a = ½ takes its limit 2.
/// The grid maximiser is refined by golden-section search.
CoefficientEstimate ampdamp_contraction_conjecture(double g1, double g2, std::size_t n_grid);

/// [η_tr², η_tr]
Interval sandwich_check(double eta_tr);

}  // namespace qchan
