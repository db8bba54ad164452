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
#include <limits>

#include "qchan/channels.hpp"

namespace qchan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Eigenvalues below cutoff·λ_max count as zero; ρ-weight above cutoff
/// outside supp(σ) makes a divergence infinite.
struct SupportPolicy {
  double eigenvalue_cutoff = 1e-12;
};

/// tr ρ(ln ρ − ln σ) in nats, or +∞ on a support violation.
double rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                   const SupportPolicy& policy = {});
double vn_entropy(const DensityMatrix& rho);
/// tr|ρ − σ|, in [0, 2] for states.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// E_s(ρ||σ) = tr(ρ − sσ)₊, s ≥ 1.
double hockey_stick(const DensityMatrix& rho, const DensityMatrix& sigma, double s);

/// (ln a − ln b)/(a − b), with k(a, a) = 1/a.
double bkm_kernel(double a, double b);
/// Σ_ij |⟨u_i|X|u_j⟩|² k(λ_i, λ_j) in the eigenbasis of σ.
double bkm_metric(const DensityMatrix& sigma, const ComplexMatrix& x,
                  const SupportPolicy& policy = {});
/// g at ½(I + w·σ) along y·σ. +∞ on the sphere unless y = 0.
double bkm_qubit(const Vec3& w, const Vec3& y);
/// (1 − x²)/(2x)·ln((1 + x)/(1 − x)) with f(0) = 1, f(1) = 0.
double aux_f(double x);
/// g_{N(ρ)}(N(X)) for ρ = ½(I + w·σ), X = y·σ.
double bkm_channel_qubit(const AffineRep& aff, const Vec3& w, const Vec3& y);

/// |∫₀¹∫₀ˢ g_{ρ_t}(ρ − σ) dt ds − D(ρ||σ)| with ρ_t = (1 − t)σ + tρ on an
/// n×n Gauss–Legendre grid. σ must be full rank.
double check_integral_representation_L2(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        std::size_t n_grid, const SupportPolicy& policy = {});

/// |∫₁^S (E_s(ρ||σ)/s + E_s(σ||ρ)/s²) ds + tail − D(ρ||σ)|. The integrand
/// vanishes beyond s* = max(λmax(ρ)/λmin(σ), λmax(σ)/λmin(ρ)), so S is
/// min(s_max, s*); if s_max < s* a convexity (chord) bound stands in for
/// the remainder. [1, S] is split into n_grid geometric panels, each
/// integrated by adaptive Simpson.
double check_integral_representation_L1(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        double s_max, std::size_t n_grid,
                                        const SupportPolicy& policy = {});

}  // namespace qchan
