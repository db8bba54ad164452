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
#include <set>
#include <sstream>

#include "qchan/divergences.hpp"
#include "qchan/error.hpp"
#include "qchan/lessnoisy.hpp"

namespace qchan {
namespace {

TEST(Classify, Examples) {
  const auto a = classify_degradability(0.75, 0.2, 0.81);
  EXPECT_FALSE(a.degradable);
  EXPECT_FALSE(a.antidegradable);
  const auto b = classify_degradability(0.5, 0.3, 0.3);
  EXPECT_TRUE(b.degradable);
  EXPECT_FALSE(b.antidegradable);
  for (double p : {0.1, 0.5, 0.9}) {
    const auto c = classify_degradability(p, 0.5, 0.5);
    EXPECT_TRUE(c.degradable);
    EXPECT_TRUE(c.antidegradable);
  }
  EXPECT_THROW(classify_degradability(1.2, 0.1, 0.1), Error);
}

TEST(Classify, BothOnlyOnBoundary) {
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j)
      for (double p : {0.3, 0.5, 0.7}) {
        const double g1 = i / 20.0, g2 = j / 20.0;
        const auto c = classify_degradability(p, g1, g2);
        if (c.degradable && c.antidegradable) EXPECT_NEAR(g1 + g2, 1.0, 1e-12);
      }
}

TEST(PMin, Examples) {
  EXPECT_NEAR(p_min(0.2, 0.81), 0.68066, 1e-4);
  const double x = 0.5 * (0.8 * 0.19) / (0.2 * 0.81);
  EXPECT_NEAR(p_min(0.2, 0.81), 1.0 / (1.0 + x), 1e-12);
  EXPECT_GT(p_min(0.5 - 1e-9, 0.9), 0.9999);
  EXPECT_THROW(p_min(0.6, 0.7), Error);
  EXPECT_THROW(p_min(0.2, 0.5), Error);
}

TEST(PMax, MirrorsPMin) {
  for (auto [g1, g2] : {std::pair{0.81, 0.2}, std::pair{0.9, 0.3}}) {
    const double x = 1.0 / p_min(g2, g1) - 1.0;
    EXPECT_NEAR(p_max(g1, g2), x / (1 + x), 1e-12);
    EXPECT_NEAR(p_max(g1, g2), 1.0 - p_min(g2, g1), 1e-12);
  }
}

TEST(PMin, InsideOpenUnitHalfInterval) {
  for (int i = 1; i < 100; ++i)
    for (int j = 1; j < 100; ++j) {
      const double g1 = i / 100.0, g2 = j / 100.0;
      if (!(g1 + g2 > 1.0 && g1 < 0.5)) continue;
      const double pm = p_min(g1, g2);
      EXPECT_GT(pm, 0.5);
      EXPECT_LT(pm, 1.0);
    }
}

TEST(Proven, Examples) {
  EXPECT_TRUE(proven_less_noisy(0.75, 0.2, 0.81));
  EXPECT_FALSE(proven_less_noisy(0.6, 0.2, 0.81));
  EXPECT_TRUE(proven_less_noisy(0.5, 0.2, 0.2));
}

TEST(Holevo, SingleStateEnsembleIsZero) {
  Rng rng = make_rng(1);
  const Ensemble e{{1.0, hilbert_schmidt_state(2, rng)}};
  EXPECT_NEAR(holevo_margin(0.6, 0.3, 0.7, e), 0.0, 1e-14);
  EXPECT_NEAR(holevo_information(make_amplitude_damping(0.3), e), 0.0, 1e-14);
}

TEST(Holevo, ValidatesEnsembles) {
  Ensemble bad{{0.7, DensityMatrix::basis(2, 0)}, {0.7, DensityMatrix::basis(2, 1)}};
  try {
    validate_ensemble(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadEnsemble);
  }
  EXPECT_THROW(validate_ensemble({}), Error);
}

TEST(Holevo, ClassicalEnsembleThroughIdentity) {
  const Ensemble e{{0.5, DensityMatrix::basis(2, 0)}, {0.5, DensityMatrix::basis(2, 1)}};
  EXPECT_NEAR(holevo_information(make_identity(2), e), std::log(2.0), 1e-14);
}

TEST(Holevo, FlagAdditivity) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = make_rng(2, t);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double p = u(rng), g1 = u(rng), g2 = u(rng);
    const Ensemble e = sample_ensemble(rng);
    EXPECT_NEAR(holevo_margin(p, g1, g2, e), holevo_margin_direct(p, g1, g2, e), 1e-8);
  }
}

TEST(Holevo, DegradablePointNonNegative) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = make_rng(3, t);
    EXPECT_GE(holevo_margin(0.5, 0.2, 0.2, sample_ensemble(rng)), -1e-9);
  }
}

TEST(Holevo, ProvenPointNonNegative) {
  Rng rng = make_rng(4);
  for (int t = 0; t < 500; ++t) EXPECT_GE(holevo_margin(0.75, 0.2, 0.81, sample_ensemble(rng)), -1e-9);
}

TEST(Holevo, AntiDegradablePointNonPositive) {
  Rng rng = make_rng(5);
  for (int t = 0; t < 200; ++t) EXPECT_LE(holevo_margin(0.5, 0.7, 0.8, sample_ensemble(rng)), 1e-9);
}

TEST(SampleEnsemble, Shape) {
  Rng rng = make_rng(6);
  std::set<std::size_t> sizes;
  for (int t = 0; t < 200; ++t) {
    const Ensemble e = sample_ensemble(rng);
    sizes.insert(e.size());
    EXPECT_NO_THROW(validate_ensemble(e));
  }
  EXPECT_EQ(sizes, (std::set<std::size_t>{2, 3, 4}));
}

TEST(Sweep, SmokeAndOrdering) {
  const auto rows = sweep_region(3, {0.6});
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].p, 0.6);
    EXPECT_TRUE(rows[i].holevo_margin_min.has_value());
  }
  EXPECT_LE(rows[0].gamma2, rows[1].gamma2);
  EXPECT_EQ(rows[0].gamma1, rows[1].gamma1);
  const auto multi = sweep_region(4, {0.6, 0.75, 0.9});
  ASSERT_EQ(multi.size(), 48u);
  EXPECT_EQ(multi[0].p, 0.6);
  EXPECT_EQ(multi[1].p, 0.75);
  EXPECT_EQ(multi[2].p, 0.9);
}

TEST(Sweep, RecordsAreConsistent) {
  SweepOptions o;
  o.holevo_samples = 4;
  const auto rows = sweep_region(50, {0.6, 0.75, 0.9}, o);
  ASSERT_EQ(rows.size(), 7500u);
  bool interior = false;
  for (const auto& r : rows) {
    if (r.proven_less_noisy && !r.degradable) {
      const bool first = r.gamma1 + r.gamma2 > 1 && r.gamma1 < 0.5 && r.p_min && r.p >= *r.p_min - 1e-12;
      const bool second = r.gamma1 + r.gamma2 > 1 && r.gamma2 < 0.5;
      EXPECT_TRUE(first || second);
    }
    if (r.p_min) {
      EXPECT_LT(*r.p_min, 1.0);
      interior = true;
    }
  }
  EXPECT_TRUE(interior);
}

TEST(Sweep, ExplicitGammasAndJobsInvariance) {
  SweepOptions o;
  o.gamma1_values = {0.2};
  o.gamma2_values = {0.81};
  const auto rows = sweep_region(50, {0.75}, o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].degradable);
  EXPECT_TRUE(rows[0].proven_less_noisy);

  SweepOptions a;
  a.seed = 9;
  SweepOptions b = a;
  b.jobs = 4;
  std::ostringstream x, y;
  write_region_csv(x, sweep_region(6, {0.6, 0.9}, a));
  write_region_csv(y, sweep_region(6, {0.6, 0.9}, b));
  EXPECT_EQ(x.str(), y.str());
}

TEST(Surface, Examples) {
  const auto pts = relative_expansion_surface(5);
  ASSERT_EQ(pts.size(), 25u);
  for (const auto& s : pts) {
    if (s.gamma1 == s.gamma2) EXPECT_NEAR(s.conjectured, 1.0, 1e-12);
    if (s.gamma1 < s.gamma2) EXPECT_GE(s.conjectured, 1.0);
    EXPECT_FALSE(s.numerical.has_value());
  }
}

TEST(Formats, Round12) {
  EXPECT_EQ(format12(0.1 + 0.2), "0.3");
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
}

TEST(Formats, RegionRoundTrip) {
  const auto rows = sweep_region(4, {0.6, 0.75});
  std::ostringstream csv;
  write_region_csv(csv, rows);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), kRegionCsvHeader);
  std::istringstream in(csv.str());
  const auto back = read_region_csv(in);
  ASSERT_EQ(back.size(), rows.size());
  std::ostringstream again;
  write_region_csv(again, back);
  EXPECT_EQ(again.str(), csv.str());

  std::ostringstream js;
  write_region_json(js, rows, {{"k", "v"}});
  std::istringstream jin(js.str());
  const auto jback = read_region_json(jin);
  std::ostringstream jcsv;
  write_region_csv(jcsv, jback);
  EXPECT_EQ(jcsv.str(), csv.str());
}

TEST(Formats, SurfaceRoundTrip) {
  auto pts = relative_expansion_surface(4);
  pts[3].numerical = 0.123456789012345;
  std::ostringstream csv;
  write_surface_csv(csv, pts);
  std::istringstream in(csv.str());
  const auto back = read_surface_csv(in);
  ASSERT_EQ(back.size(), pts.size());
  EXPECT_FALSE(back[0].numerical.has_value());
  EXPECT_EQ(*back[3].numerical, 0.123456789012);
  std::ostringstream js;
  write_surface_json(js, pts);
  std::istringstream jin(js.str());
  const auto jback = read_surface_json(jin);
  std::ostringstream c2;
  write_surface_csv(c2, jback);
  EXPECT_EQ(c2.str(), csv.str());
}

TEST(Formats, RejectsMalformedCsv) {
  std::istringstream bad("gamma1,gamma2\n0.1,0.2\n");
  EXPECT_THROW(read_region_csv(bad), Error);
}

}  // namespace
}  // namespace qchan
