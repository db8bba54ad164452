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

#include "qchan/random_states.hpp"

#include <cmath>

#include "qchan/error.hpp"

namespace qchan {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = n(rng);
      const double im = n(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

// Orthonormalises columns and fixes the phase of the R diagonal so the
// result is Haar distributed.
ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  const ComplexMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR();
  for (std::size_t j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

ComplexVector haar_vector(std::size_t dim, Rng& rng) {
  require(dim > 0, ErrorCode::kBadParam, "dimension must be positive");
  ComplexVector v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix haar_pure(std::size_t dim, Rng& rng) {
  return DensityMatrix::pure(haar_vector(dim, rng));
}

DensityMatrix hilbert_schmidt_state(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  const ComplexMatrix m = g * g.adjoint();
  return DensityMatrix::assume_valid(m / m.trace().real());
}

DensityMatrix random_bloch_state(Rng& rng, double max_radius) {
  require(max_radius >= 0.0 && max_radius <= 1.0, ErrorCode::kBadBloch, "radius must be in [0,1]");
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec3 dir;
  do {
    dir = Vec3(n(rng), n(rng), n(rng));
  } while (dir.norm() < 1e-12);
  return DensityMatrix::bloch(dir.normalized() * (max_radius * u(rng)));
}

DensityMatrix random_full_rank(std::size_t dim, Rng& rng, double floor) {
  const double d = static_cast<double>(dim);
  require(floor >= 0.0 && floor * d <= 1.0, ErrorCode::kBadParam, "eigenvalue floor too large");
  const DensityMatrix hs = hilbert_schmidt_state(dim, rng);
  return DensityMatrix::assume_valid((1.0 - d * floor) * hs.matrix() +
                                     floor * ComplexMatrix::Identity(dim, dim));
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) { return haar_isometry(dim, dim, rng); }

Channel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_count, Rng& rng) {
  require(dim_in > 0 && dim_out > 0 && kraus_count > 0, ErrorCode::kBadParam,
          "random channel needs positive dimensions");
  require(dim_out * kraus_count >= dim_in, ErrorCode::kBadParam,
          "Stinespring space smaller than the input");
  const ComplexMatrix v = haar_isometry(dim_out * kraus_count, dim_in, rng);
  std::vector<ComplexMatrix> ks;
  for (std::size_t k = 0; k < kraus_count; ++k) ks.push_back(v.middleRows(k * dim_out, dim_out));
  return Channel::from_kraus(std::move(ks));
}

std::vector<double> dirichlet(std::size_t n, Rng& rng) {
  require(n > 0, ErrorCode::kBadParam, "need at least one weight");
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  double s = 0.0;
  for (auto& x : w) {
    x = e(rng);
    s += x;
  }
  for (auto& x : w) x /= s;
  return w;
}

}  // namespace qchan
