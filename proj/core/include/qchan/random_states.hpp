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
#include <random>
#include <vector>

#include "qchan/channels.hpp"

namespace qchan {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream); streams are decorrelated with
/// a splitmix64 finaliser so neighbouring indices do not share state.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

ComplexVector haar_vector(std::size_t dim, Rng& rng);
DensityMatrix haar_pure(std::size_t dim, Rng& rng);
/// Induced (Hilbert–Schmidt) measure: G G† / tr with Ginibre G.
DensityMatrix hilbert_schmidt_state(std::size_t dim, Rng& rng);
/// Qubit state with Bloch radius uniform in [0, max_radius] and isotropic
/// direction.
DensityMatrix random_bloch_state(Rng& rng, double max_radius);
/// (1 − d·floor) ρ_HS + floor·I, so every eigenvalue is at least floor.
DensityMatrix random_full_rank(std::size_t dim, Rng& rng, double floor);

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
/// Random Stinespring isometry cut into `kraus_count` blocks.
Channel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_count, Rng& rng);

/// Flat Dirichlet(1, …, 1) weights.
std::vector<double> dirichlet(std::size_t n, Rng& rng);

}  // namespace qchan
