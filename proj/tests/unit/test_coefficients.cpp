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

#include <cmath>

#include "qchan/coefficients.hpp"
#include "qchan/divergences.hpp"
#include "qchan/error.hpp"
#include "qchan/random_states.hpp"

namespace qchan {
namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kIo;
}

TEST(DepolBounds, Examples) {
  const auto e = depol_relative_bounds(2, 0.5, 0.25);
  EXPECT_EQ(e.kind, EstimateKind::kBoundPair);
  EXPECT_NEAR(e.lo, 4.0 / 9.0 * 0.5, 1e-14);
  EXPECT_NEAR(e.hi, 4.0 / 9.0 * 0.875 / 0.75, 1e-14);
  const auto same = depol_relative_bounds(3, 0.4, 0.4);
  EXPECT_NEAR(same.lo, 1.0, 1e-14);
  EXPECT_NEAR(same.hi, 1.0, 1e-14);
  for (std::size_t d : {2u, 3u, 5u}) {
    const double p = 0.3;
    EXPECT_NEAR(depol_relative_bounds(d, p, 0.0).hi, std::pow(1 - p, 2) / (1 - (d - 1.0) / d * p), 1e-14);
  }
  EXPECT_EQ(code_of([] { depol_relative_bounds(2, 0.2, 0.3); }), ErrorCode::kBadParam);
  EXPECT_EQ(code_of([] { depol_relative_bounds(1, 0.5, 0.3); }), ErrorCode::kBadParam);
}

TEST(DepolBounds, OrderedAcrossGrid) {
  for (int i = 1; i < 20; ++i)
    for (int j = 0; j <= i; ++j)
      for (std::size_t d : {2u, 4u}) {
        const auto e = depol_relative_bounds(d, i / 20.0, j / 20.0);
        EXPECT_LE(e.lo, e.hi + 1e-15);
      }
}

TEST(DepolQubitExact, Examples) {
  const auto ce = depol_qubit_exact(0.5, 0.25);
  EXPECT_NEAR(*ce.contraction.value, 4.0 / 9.0, 1e-14);
  EXPECT_NEAR(*ce.expansion.value, 4.0 / 9.0 * 0.4375 / 0.75, 1e-14);
  EXPECT_NEAR(*ce.expansion.value, 0.25926, 1e-5);
  const auto same = depol_qubit_exact(0.3, 0.3);
  EXPECT_NEAR(*same.contraction.value, 1.0, 1e-14);
  EXPECT_NEAR(*same.expansion.value, 1.0, 1e-14);
  EXPECT_NEAR(*depol_qubit_exact(0.6, 0.0).contraction.value, 0.16, 1e-14);
}

TEST(DepolQubitExact, ReciprocityAndMonotonicity) {
  for (double p1 : {0.2, 0.5, 0.8})
    for (double p2 : {0.1, 0.4, 0.7}) {
      const auto a = depol_qubit_exact(p1, p2);
      const auto b = depol_qubit_exact(p2, p1);
      EXPECT_NEAR(*a.expansion.value * *b.contraction.value, 1.0, 1e-12);
    }
  double prev = 1.0;
  for (double p1 = 0.15; p1 < 0.99; p1 += 0.05) {
    const double v = *depol_qubit_exact(p1, 0.1).contraction.value;
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(DepolBounds, ContainQubitExact) {
  for (double p1 : {0.3, 0.6, 0.9})
    for (double p2 : {0.05, 0.2}) {
      const auto b = depol_relative_bounds(2, p1, p2);
      const double eta = *depol_qubit_exact(p1, p2).contraction.value;
      EXPECT_GE(eta, b.lo - 1e-12);
      EXPECT_LE(eta, b.hi + 1e-12);
    }
}

TEST(StrictlyPositive, Examples) {
  const Channel dp = make_depolarizing(2, 0.5);
  const DensityMatrix r = DensityMatrix::bloch(Vec3(0.1, 0.2, 0.3));
  const auto same = strictly_positive_bounds(dp, r, r);
  EXPECT_EQ(same.bound.lo, 0.0);
  EXPECT_EQ(same.bound.hi, 0.0);
  const auto b = strictly_positive_bounds(dp, DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1));
  EXPECT_NEAR(b.lambda_min, 0.25, 1e-12);
  EXPECT_NEAR(b.lambda_max, 0.75, 1e-12);
  EXPECT_EQ(code_of([] {
              strictly_positive_bounds(make_amplitude_damping(1.0), DensityMatrix::basis(2, 0),
                                       DensityMatrix::maximally_mixed(2));
            }),
            ErrorCode::kNotStrictlyPositive);
}

TEST(StrictlyPositive, ContainsRelativeEntropy) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = make_rng(1, t);
    const Channel ch = make_depolarizing(2 + t % 2, 0.3 + 0.004 * t);
    const DensityMatrix r = hilbert_schmidt_state(ch.dim_in(), rng), s = hilbert_schmidt_state(ch.dim_in(), rng);
    const auto b = strictly_positive_bounds(ch, r, s);
    const double d = rel_entropy(ch.apply(r), ch.apply(s));
    EXPECT_TRUE(b.contains);
    EXPECT_GE(d, b.bound.lo - 1e-12);
    EXPECT_LE(d, b.bound.hi + 1e-12);
  }
}

TEST(DephasingBound, Examples) {
  const auto e = dephasing_cp_expansion_bound(DephasingSpec::qubit(0.4), DephasingSpec::qubit(0.5), 0.25);
  EXPECT_NEAR(e.lo, 0.2, 1e-14);
  EXPECT_LE(e.hi, 1.0);
  const auto tiny = dephasing_cp_expansion_bound(DephasingSpec::qubit(0.4), DephasingSpec::qubit(0.4), 1e-8);
  EXPECT_NEAR(tiny.lo, 1.0, 1e-7);
  EXPECT_EQ(code_of([] { dephasing_cp_expansion_bound(DephasingSpec::qubit(0.4), DephasingSpec::qubit(0.5), 0.5); }),
            ErrorCode::kAssumptionFailed);
  // p′ > (1+ε)p breaks the upper CP order.
  EXPECT_EQ(code_of([] { dephasing_cp_expansion_bound(DephasingSpec::qubit(0.2), DephasingSpec::qubit(0.5), 0.25); }),
            ErrorCode::kAssumptionFailed);
}

TEST(DephasingBound, ListsEveryBrokenHypothesis) {
  try {
    dephasing_cp_expansion_bound(DephasingSpec::qubit(0.1), DephasingSpec::qubit(0.9), 0.6);
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("eps"), std::string::npos);
    EXPECT_NE(msg.find("Gamma' <= (1+eps)*Gamma"), std::string::npos);
  }
}

TEST(DephasingBound, PositiveExactlyBelowHalf) {
  for (double p = 0.1; p < 0.9; p += 0.1) {
    for (double eps : {0.05, 0.2, 0.45}) {
      const double pp = p * (1 + eps * 0.999);
      if (pp > 2.0) continue;
      try {
        const auto e = dephasing_cp_expansion_bound(DephasingSpec::qubit(p), DephasingSpec::qubit(pp), eps);
        EXPECT_GT(e.lo, 0.0);
        EXPECT_LE(e.lo, 1.0);
      } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::kAssumptionFailed);
      }
    }
  }
}

TEST(ComparisonDephasingBound, Examples) {
  EXPECT_NEAR(lemma_comparison_dephasing_bound(1e-12, 3.0), 1.0, 1e-10);
  EXPECT_NEAR(lemma_comparison_dephasing_bound(0.25, 8.0 / 3.0), 0.25, 1e-14);
  EXPECT_NEAR(lemma_comparison_dephasing_bound(0.5, 1.0), 0.0, 1e-15);
}

TEST(QubitGeneral, Examples) {
  QubitConstants ones;
  const auto a = qubit_general_bounds(ones);
  EXPECT_DOUBLE_EQ(a.eta_upper, 1.0);
  EXPECT_DOUBLE_EQ(a.expansion_lower, 1.0);
  QubitConstants k;
  k.c = {2, 1, 2, 1, 2, 1};
  const auto b = qubit_general_bounds(k);
  EXPECT_DOUBLE_EQ(b.eta_upper, 2.0);
  EXPECT_DOUBLE_EQ(b.expansion_lower, 0.125);
  QubitConstants bad;
  bad.c = {1, 2, 1, 1, 1, 1};
  EXPECT_EQ(code_of([&] { qubit_general_bounds(bad); }), ErrorCode::kBadParam);
}

TEST(QubitGeneral, SwappedConstantsRespectReciprocity) {
  const AffineRep n = to_affine(make_qubit_dephasing(0.6));
  const AffineRep m = to_affine(make_qubit_dephasing(0.3));
  const QubitConstants k = estimate_qubit_condition_constants(n, m, 8);
  const auto fwd = qubit_general_bounds(k);
  const auto back = qubit_general_bounds(k.swapped());
  EXPECT_NEAR(fwd.expansion_lower, 1.0 / back.eta_upper, 1e-12);
}

TEST(QubitConstants, Examples) {
  const AffineRep a = to_affine(make_amplitude_damping(0.3));
  const QubitConstants same = estimate_qubit_condition_constants(a, a, 6);
  for (double c : same.c) EXPECT_NEAR(c, 1.0, 1e-12);
  const QubitConstants d = estimate_qubit_condition_constants(to_affine(make_qubit_dephasing(0.6)),
                                                              to_affine(make_qubit_dephasing(0.3)), 20);
  // |T_M y| / |T_N y| over diag(0.4, 0.4, 1) vs diag(0.7, 0.7, 1).
  EXPECT_NEAR(d.c[0], 0.7 / 0.4, 1e-3);
  EXPECT_NEAR(d.c[1], 1.0, 1e-3);
}

TEST(AmpDamp, TraceContraction) {
  EXPECT_NEAR(ampdamp_trace_contraction(0.36).eta_tr, 0.8, 1e-14);
  EXPECT_NEAR(ampdamp_trace_contraction(1e-12).eta_tr, 1.0, 1e-11);
  EXPECT_NEAR(ampdamp_trace_contraction(1 - 1e-12).eta_tr, 0.0, 1e-5);
  const auto s = ampdamp_trace_contraction(0.36).entropy_sandwich;
  EXPECT_NEAR(s.lo, 0.64, 1e-14);
  EXPECT_NEAR(s.hi, 0.8, 1e-14);
}

TEST(AmpDamp, ExpansionConjecture) {
  EXPECT_NEAR(*ampdamp_expansion_conjecture(0.4, 0.4).value, 1.0, 1e-14);
  EXPECT_NEAR(*ampdamp_expansion_conjecture(0.2, 0.19).value, 0.19 * 0.8 / (0.2 * 0.81), 1e-14);
  EXPECT_EQ(ampdamp_expansion_conjecture(0.5, 0.25).kind, EstimateKind::kConjectured);
  EXPECT_NEAR(*ampdamp_expansion_conjecture(0.5, 0.25).value, 1.0 / 3.0, 1e-14);
  EXPECT_EQ(code_of([] { ampdamp_expansion_conjecture(0.0, 0.5); }), ErrorCode::kBadParam);
}

TEST(AmpDamp, ExpansionConjectureLimitState) {
  const double g1 = 0.2, g2 = 0.19, eps = 1e-4;
  const DensityMatrix rho = DensityMatrix::basis(2, 1);
  const DensityMatrix sig = DensityMatrix::diagonal({eps, 1 - eps});
  const Channel a1 = make_amplitude_damping(g1), a2 = make_amplitude_damping(g2);
  const double r = rel_entropy(a1.apply(rho), a1.apply(sig)) / rel_entropy(a2.apply(rho), a2.apply(sig));
  EXPECT_NEAR(r, *ampdamp_expansion_conjecture(g1, g2).value, 1e-2);
}

TEST(AmpDamp, ContractionConjecture) {
  EXPECT_NEAR(*ampdamp_contraction_conjecture(0.3, 0.3, 1000).value, 1.0, 1e-12);
  for (auto [g1, g2] : {std::pair{0.6, 0.3}, std::pair{0.5, 0.25}, std::pair{0.9, 0.1}}) {
    const double v = *ampdamp_contraction_conjecture(g1, g2, 2000).value;
    EXPECT_LE(v, std::sqrt((1 - g1) / (1 - g2)) + 1e-9);
    EXPECT_GE(v, (1 - g1) / (1 - g2) - 1e-12);
  }
  const double a = *ampdamp_contraction_conjecture(0.6, 0.3, 10000).value;
  const double b = *ampdamp_contraction_conjecture(0.6, 0.3, 7919).value;
  EXPECT_NEAR(a, b, 1e-4);
  EXPECT_NEAR(a, 0.659068, 1e-6);
}

TEST(Sandwich, Examples) {
  EXPECT_DOUBLE_EQ(sandwich_check(1.0).lo, 1.0);
  EXPECT_DOUBLE_EQ(sandwich_check(1.0).hi, 1.0);
  EXPECT_NEAR(sandwich_check(0.8).lo, 0.64, 1e-15);
  EXPECT_DOUBLE_EQ(sandwich_check(0.8).hi, 0.8);
  EXPECT_DOUBLE_EQ(sandwich_check(0.0).hi, 0.0);
  EXPECT_EQ(code_of([] { sandwich_check(1.5); }), ErrorCode::kBadParam);
}

}  // namespace
}  // namespace qchan
