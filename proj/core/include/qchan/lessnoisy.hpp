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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchan/estimator.hpp"

namespace qchan {

struct Degradability {
  bool degradable = false;
  bool antidegradable = false;
};

/// Degradability of Ψ_{p,γ₁,γ₂} = p|0⟩⟨0|⊗A_γ₁ + (1−p)|1⟩⟨1|⊗A_γ₂.
Degradability classify_degradability(double p, double g1, double g2);

/// Ψ_{p,γ₁,γ₂} as a flagged mixture (output C²⊗C²).
Channel make_flagged_ampdamp(double p, double g1, double g2);

/// Lower p-threshold on {γ₁+γ₂ > 1, γ₁ < ½}:
/// 1/(1 + (1 − √(1−γ̃₁))·(1−γ₁)(1−γ₂)/(γ₁γ₂)), γ̃₁ = (1−2γ₁)/(1−γ₁).
/// The expansion factor is the conjectured closed form, so results are
/// conditional on it. Throws kBadParam outside the region.
double p_min(double g1, double g2);
/// Upper p-threshold x/(1+x) on {γ₁+γ₂ > 1, γ₂ < ½}, x built as in p_min
/// with the roles of γ₁ and γ₂ exchanged.
double p_max(double g1, double g2);

/// Uses only proven implications (degradable, or a threshold bullet).
bool proven_less_noisy(double p, double g1, double g2);

struct EnsembleMember {
  double weight = 0.0;
  DensityMatrix state;
};
using Ensemble = std::vector<EnsembleMember>;

/// Throws kBadEnsemble unless weights are non-negative, sum to 1 (1e−9) and
/// all states share one dimension.
void validate_ensemble(const Ensemble& ensemble);

/// I(X;B) = S(Σ w N(ρ)) − Σ w S(N(ρ)).
double holevo_information(const Channel& ch, const Ensemble& ensemble);

/// I(X;B) − I(X;E) for Ψ_{p,γ₁,γ₂}, via the flag decomposition into the two
/// amplitude damping branches and their complements.
double holevo_margin(double p, double g1, double g2, const Ensemble& ensemble);
/// Same quantity from the full flagged channel and its complementary.
double holevo_margin_direct(double p, double g1, double g2, const Ensemble& ensemble);

/// 2–4 members, each a Haar pure or Hilbert–Schmidt mixed qubit state with
/// equal odds, flat Dirichlet weights.
Ensemble sample_ensemble(Rng& rng);

struct RegionSample {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double p = 0.0;
  bool degradable = false;
  bool antidegradable = false;
  std::optional<double> p_min;
  bool proven_less_noisy = false;
  /// Minimum sampled margin; absent when no ensembles were drawn.
  std::optional<double> holevo_margin_min;
};

struct SweepOptions {
  std::size_t holevo_samples = 16;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// Replace the default γ grid (i+1)/(grid+1) when non-empty.
  std::vector<double> gamma1_values;
  std::vector<double> gamma2_values;
};

/// Records ordered by (γ₁ index, γ₂ index, p index); the sampled margins
/// use one RNG stream per record, so the output is independent of jobs.
std::vector<RegionSample> sweep_region(std::size_t grid, const std::vector<double>& p_list,
                                       const SweepOptions& options = {});

struct SurfacePoint {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double conjectured = 0.0;
  std::optional<double> numerical;
};

/// Conjectured η̌_{A_γ₁,A_γ₂} on the grid (i+1)/(grid+1), plus optional
/// optimizer estimates when `numerical` is given.
std::vector<SurfacePoint> relative_expansion_surface(
    std::size_t grid, const std::optional<OptimizerConfig>& numerical = std::nullopt);

/// Rounds to 12 significant digits, the precision of every emitted file.
double round12(double x);
std::string format12(double x);

inline constexpr const char* kRegionCsvHeader =
    "gamma1,gamma2,p,degradable,antidegradable,p_min,proven_less_noisy,holevo_margin_min";
inline constexpr const char* kSurfaceCsvHeader = "gamma1,gamma2,conjectured,numerical";

void write_region_csv(std::ostream& out, const std::vector<RegionSample>& samples);
std::vector<RegionSample> read_region_csv(std::istream& in);
void write_region_json(std::ostream& out, const std::vector<RegionSample>& samples,
                       const std::map<std::string, std::string>& meta = {});
std::vector<RegionSample> read_region_json(std::istream& in);

void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& points);
std::vector<SurfacePoint> read_surface_csv(std::istream& in);
void write_surface_json(std::ostream& out, const std::vector<SurfacePoint>& points,
                        const std::map<std::string, std::string>& meta = {});
std::vector<SurfacePoint> read_surface_json(std::istream& in);

}  // namespace qchan
