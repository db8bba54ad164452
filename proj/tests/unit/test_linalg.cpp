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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qchan/error.hpp"
#include "qchan/linalg.hpp"
#include "qchan/random_states.hpp"

namespace qchan {
namespace {

using testing::max_abs_diff;

TEST(EigHermitian, DiagonalInput) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  const Spectrum s = eig_hermitian(m);
  EXPECT_DOUBLE_EQ(s.values(0), 1.0);
  EXPECT_DOUBLE_EQ(s.values(1), 2.0);
  EXPECT_NEAR(std::abs(s.vectors(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.vectors(1, 1)), 1.0, 1e-14);
}

TEST(EigHermitian, PauliX) {
  const RealVector v = eigvals_hermitian(pauli(1));
  EXPECT_NEAR(v(0), -1.0, 1e-14);
  EXPECT_NEAR(v(1), 1.0, 1e-14);
}

TEST(EigHermitian, ReconstructsRandomInputs) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng = make_rng(11, t);
    const ComplexMatrix h = random_hermitian(4, rng);
    const Spectrum s = eig_hermitian(h);
    const ComplexMatrix back = s.vectors * s.values.asDiagonal() * s.vectors.adjoint();
    EXPECT_LT((back - h).norm() / h.norm(), 1e-10);
    EXPECT_LT(max_abs_diff(s.vectors.adjoint() * s.vectors, ComplexMatrix::Identity(4, 4)), 1e-10);
    for (int i = 1; i < 4; ++i) EXPECT_LE(s.values(i - 1), s.values(i));
    EXPECT_NEAR(s.values.sum(), h.trace().real(), 1e-10);
  }
}

TEST(EigHermitian, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  try {
    eig_hermitian(m);
    FAIL() << "expected kNonHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonHermitian);
  }
}

TEST(EigHermitian, DeterministicOnIdenticalBits) {
  Rng rng = make_rng(3);
  const ComplexMatrix h = random_hermitian(5, rng);
  const Spectrum a = eig_hermitian(h);
  const Spectrum b = eig_hermitian(h);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.vectors, b.vectors);
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(4, 4));
}

TEST(Kron, MatchesIndexFormulaAndMixedProduct) {
  Rng rng = make_rng(5);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = ComplexMatrix::Random(2, 3);
    const ComplexMatrix b = ComplexMatrix::Random(3, 2);
    EXPECT_LT(max_abs_diff(kron(a, b), testing::naive_kron(a, b)), 1e-15);
    const ComplexMatrix p = random_hermitian(2, rng), q = random_hermitian(2, rng);
    const ComplexMatrix r = random_hermitian(2, rng), s = random_hermitian(2, rng);
    EXPECT_LT(max_abs_diff(kron(p, q) * kron(r, s), kron(p * r, q * s)), 1e-12);
  }
}

TEST(PartialTrace, ProductOperator) {
  Rng rng = make_rng(7);
  const ComplexMatrix xa = random_hermitian(2, rng);
  const ComplexMatrix xb = random_hermitian(3, rng);
  const ComplexMatrix m = kron(xa, xb);
  EXPECT_LT(max_abs_diff(partial_trace(m, 2, 3, Keep::kFirst), xb.trace() * xa), 1e-12);
  EXPECT_LT(max_abs_diff(partial_trace(m, 2, 3, Keep::kSecond), xa.trace() * xb), 1e-12);
}

TEST(PartialTrace, MaximallyEntangled) {
  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix m = phi * phi.adjoint();
  const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
  EXPECT_LT(max_abs_diff(partial_trace(m, 2, 2, Keep::kFirst), half), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(m, 2, 2, Keep::kSecond), half), 1e-15);
}

TEST(PartialTrace, MatchesIndexLoopOracle) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = make_rng(9, t);
    const std::size_t da = 2 + t % 2, db = 2 + (t / 2) % 3;
    const ComplexMatrix m = ComplexMatrix::Random(da * db, da * db);
    const ComplexMatrix n = ComplexMatrix::Random(da * db, da * db);
    EXPECT_LT(max_abs_diff(partial_trace(m, da, db, Keep::kFirst), testing::naive_trace_b(m, da, db)), 1e-14);
    EXPECT_LT(max_abs_diff(partial_trace(m, da, db, Keep::kSecond), testing::naive_trace_a(m, da, db)), 1e-14);
    // Linearity and trace preservation.
    const Complex c(0.3, -1.1);
    EXPECT_LT(max_abs_diff(partial_trace(m + c * n, da, db, Keep::kFirst),
                           partial_trace(m, da, db, Keep::kFirst) + c * partial_trace(n, da, db, Keep::kFirst)),
              1e-13);
    EXPECT_NEAR(std::abs(partial_trace(m, da, db, Keep::kSecond).trace() - m.trace()), 0.0, 1e-13);
  }
}

TEST(PartialTrace, DimensionMismatch) {
  try {
    partial_trace(ComplexMatrix::Identity(5, 5), 2, 2, Keep::kFirst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimMismatch);
  }
}

TEST(IsPsd, Basics) {
  EXPECT_TRUE(is_psd(ComplexMatrix::Identity(3, 3)));
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = -1.0;
  EXPECT_FALSE(is_psd(m));
}

TEST(IsPsd, ClosedUnderAddition) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng = make_rng(13, t);
    const ComplexMatrix a = random_hermitian(3, rng), b = random_hermitian(3, rng);
    const ComplexMatrix pa = a * a.adjoint(), pb = b * b.adjoint();
    ASSERT_TRUE(is_psd(pa));
    ASSERT_TRUE(is_psd(pb));
    EXPECT_TRUE(is_psd(pa + pb));
  }
}

TEST(Pauli, Algebra) {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_LT(max_abs_diff(pauli(k) * pauli(k), i2), 1e-15);
    EXPECT_NEAR(std::abs(pauli(k).trace()), 0.0, 1e-15);
  }
  EXPECT_LT(max_abs_diff(pauli(1) * pauli(2), Complex(0, 1) * pauli(3)), 1e-15);
}

TEST(SpectralApply, SquareRootSquares) {
  Rng rng = make_rng(17);
  const ComplexMatrix a = random_hermitian(3, rng);
  const ComplexMatrix p = a * a.adjoint();
  const ComplexMatrix r = spectral_apply(p, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  EXPECT_LT(max_abs_diff(r * r, p), 1e-10);
}

}  // namespace
}  // namespace qchan
