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

#include "qchan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <Eigen/SVD>

#include "qchan/divergences.hpp"
#include "qchan/error.hpp"
#include "qchan/random_states.hpp"
#include "qchan/lessnoisy.hpp"

namespace qchan::cli {
namespace {

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(4);
  ss << x;
  return ss.str();
}

CheckResult timed(const std::string& suite, const std::string& name,
                  const std::function<std::pair<bool, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.suite = suite;
  r.name = name;
  try {
    auto [ok, detail] = body();
    r.passed = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::size_t pick(std::size_t trials, std::size_t fallback) { return trials ? trials : fallback; }

ComplexMatrix traceless_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix x = random_hermitian(d, rng);
  x -= (x.trace() / static_cast<double>(d)) * ComplexMatrix::Identity(d, d);
  return x;
}

// ρ Haar pure, σ a partially depolarised second pure state.
std::pair<DensityMatrix, DensityMatrix> pure_pair(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const DensityMatrix rho = haar_pure(2, rng);
  const DensityMatrix phi = haar_pure(2, rng);
  return {rho, mix(phi, DensityMatrix::maximally_mixed(2), u(rng))};
}

std::vector<CheckResult> suite_dpi(const VerifyOptions& o) {
  const std::size_t n = pick(o.trials, 200);
  return {timed("dpi", "relative entropy is monotone under channels", [&] {
    double worst = -kInfinity;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed, t);
      std::uniform_int_distribution<int> dim(2, 3);
      std::uniform_int_distribution<int> kr(1, 4);
      const auto din = static_cast<std::size_t>(dim(rng));
      const auto dout = static_cast<std::size_t>(dim(rng));
      auto k = static_cast<std::size_t>(kr(rng));
      while (dout * k < din) ++k;
      const Channel ch = random_channel(din, dout, k, rng);
      const DensityMatrix rho = hilbert_schmidt_state(din, rng);
      const DensityMatrix sigma = hilbert_schmidt_state(din, rng);
      const double slack = rel_entropy(ch.apply(rho), ch.apply(sigma)) - rel_entropy(rho, sigma);
      worst = std::max(worst, slack);
    }
    return std::pair{worst <= 1e-9, std::to_string(n) + " trials, max D(N)-D = " + fmt(worst)};
  })};
}

std::vector<CheckResult> suite_bkm(const VerifyOptions& o) {
  const std::size_t n = pick(o.trials, 100);
  std::vector<CheckResult> out;
  out.push_back(timed("bkm", "second derivative of D(rho_t||sigma) equals the metric", [&] {
    double worst = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed, t);
      const DensityMatrix rho = random_bloch_state(rng, 0.9);
      const DensityMatrix sigma = random_bloch_state(rng, 0.9);
      const double s = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
      const double h = 1e-4;
      auto f = [&](double x) { return rel_entropy(mix(sigma, rho, x), sigma); };
      const double fd = (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h);
      const double g = bkm_metric(mix(sigma, rho, s), rho.matrix() - sigma.matrix());
      if (g > 1e-8) worst = std::max(worst, std::abs(fd - g) / g);
    }
    return std::pair{worst <= 1e-4, "max relative deviation " + fmt(worst)};
  }));
  out.push_back(timed("bkm", "qubit closed form matches spectral evaluation", [&] {
    double worst = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed + 1, t);
      const DensityMatrix s = random_bloch_state(rng, 0.98);
      const Vec3 w = s.bloch_vector();
      const Vec3 y = Vec3(haar_vector(3, rng).real()).normalized();
      ComplexMatrix x = ComplexMatrix::Zero(2, 2);
      for (int i = 0; i < 3; ++i) x += y(i) * pauli(i + 1);
      const double a = bkm_qubit(w, y);
      const double b = bkm_metric(DensityMatrix::bloch(w), x);
      worst = std::max(worst, std::abs(a - b) / b);
    }
    return std::pair{worst <= 1e-8, "max relative deviation " + fmt(worst)};
  }));
  out.push_back(timed("bkm", "metric comparison under rho <= c sigma", [&] {
    double worst = -kInfinity;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed + 2, t);
      const std::size_t d = 2 + t % 2;
      const DensityMatrix rho = random_full_rank(d, rng, 0.02);
      const DensityMatrix sigma = random_full_rank(d, rng, 0.02);
      const ComplexMatrix is = spectral_apply(sigma.matrix(), [](double v) { return 1.0 / std::sqrt(v); });
      const double c = eigvals_hermitian(is * rho.matrix() * is).maxCoeff();
      const ComplexMatrix x = traceless_hermitian(d, rng);
      worst = std::max(worst, bkm_metric(sigma, x) / c - bkm_metric(rho, x));
    }
    return std::pair{worst <= 1e-9, "max g_sigma/c - g_rho = " + fmt(worst)};
  }));
  out.push_back(timed("bkm", "metric is monotone under channels", [&] {
    double worst = -kInfinity;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed + 3, t);
      const Channel ch = random_channel(2, 2, 2, rng);
      const DensityMatrix sigma = random_full_rank(2, rng, 0.02);
      const ComplexMatrix x = traceless_hermitian(2, rng);
      const double g = bkm_metric(sigma, x);
      worst = std::max(worst, (bkm_metric(ch.apply(sigma), ch.apply(x)) - g) / std::max(1.0, g));
    }
    return std::pair{worst <= 1e-9, "max relative excess " + fmt(worst)};
  }));
  return out;
}

std::vector<CheckResult> suite_sandwich(const VerifyOptions& o) {
  const std::size_t n = pick(o.trials, 2000);
  std::vector<CheckResult> out;
  for (double gamma : {0.2, 0.5, 0.8}) {
    out.push_back(timed("sandwich", "amplitude damping gamma=" + fmt(gamma) + " ratios in [(1-g), sqrt(1-g)]", [&] {
      const Channel a = make_amplitude_damping(gamma);
      const Interval band = ampdamp_trace_contraction(gamma).entropy_sandwich;
      double best = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        Rng rng = make_rng(o.seed, t);
        const auto [rho, sigma] = pure_pair(rng);
        const double den = rel_entropy(rho, sigma);
        if (!(den > 1e-12) || !std::isfinite(den)) continue;
        best = std::max(best, rel_entropy(a.apply(rho), a.apply(sigma)) / den);
      }
      const bool ok = best <= band.hi + 1e-6 && best >= band.lo - 1e-3;
      return std::pair{ok, "max sampled ratio " + fmt(best) + " vs [" + fmt(band.lo) + ", " + fmt(band.hi) + "]"};
    }));
  }
  out.push_back(timed("sandwich", "random qubit channels respect eta <= eta_tr", [&] {
    double worst = -kInfinity;
    for (std::size_t c = 0; c < std::max<std::size_t>(n / 20, 1); ++c) {
      Rng rng = make_rng(o.seed + 7, c);
      const Channel ch = random_channel(2, 2, 2, rng);
      const AffineRep aff = to_affine(ch);
      Eigen::JacobiSVD<Mat3> svd(aff.T);
      const double eta_tr = svd.singularValues()(0);
      for (int s = 0; s < 20; ++s) {
        const auto [rho, sigma] = pure_pair(rng);
        const double den = rel_entropy(rho, sigma);
        if (den > 1e-12 && std::isfinite(den)) {
          worst = std::max(worst, rel_entropy(ch.apply(rho), ch.apply(sigma)) / den - eta_tr);
        }
        // Trace contraction is attained on pure inputs, so mixed pairs stay below it.
        const DensityMatrix m1 = hilbert_schmidt_state(2, rng);
        const DensityMatrix m2 = hilbert_schmidt_state(2, rng);
        const double td = trace_distance(m1, m2);
        if (td > 1e-12) worst = std::max(worst, trace_distance(ch.apply(m1), ch.apply(m2)) / td - eta_tr);
      }
    }
    return std::pair{worst <= 1e-6, "max excess over eta_tr " + fmt(worst)};
  }));
  return out;
}

std::vector<CheckResult> suite_integral(const VerifyOptions& o) {
  const std::size_t n = pick(o.trials, 50);
  std::vector<CheckResult> out;
  out.push_back(timed("integral", "L2 representation (64-node Gauss-Legendre)", [&] {
    double worst = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed, t);
      const DensityMatrix rho = random_bloch_state(rng, 0.9);
      const DensityMatrix sigma = random_bloch_state(rng, 0.9);
      worst = std::max(worst, check_integral_representation_L2(rho, sigma, 64));
    }
    return std::pair{worst < 1e-6, "max residual " + fmt(worst)};
  }));
  out.push_back(timed("integral", "L1 hockey-stick representation (adaptive Simpson)", [&] {
    double worst = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed + 1, t);
      const DensityMatrix rho = random_bloch_state(rng, 0.9);
      const DensityMatrix sigma = random_bloch_state(rng, 0.9);
      worst = std::max(worst, check_integral_representation_L1(rho, sigma, 1e6, 16));
    }
    return std::pair{worst < 1e-5, "max residual " + fmt(worst)};
  }));
  return out;
}

std::vector<CheckResult> suite_region(const VerifyOptions& o) {
  const std::size_t n = pick(o.trials, 500);
  std::vector<CheckResult> out;
  auto random_point = [](Rng& rng) {
    std::uniform_real_distribution<double> u(0.01, 0.99);
    return std::array<double, 3>{u(rng), u(rng), u(rng)};
  };
  out.push_back(timed("region", "flag decomposition matches the full channel", [&] {
    double worst = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      Rng rng = make_rng(o.seed, t);
      const auto [p, g1, g2] = random_point(rng);
      const Ensemble e = sample_ensemble(rng);
      worst = std::max(worst, std::abs(holevo_margin(p, g1, g2, e) - holevo_margin_direct(p, g1, g2, e)));
    }
    return std::pair{worst <= 1e-8, "max deviation " + fmt(worst)};
  }));
  out.push_back(timed("region", "degradable points have non-negative margin", [&] {
    double worst = kInfinity;
    std::size_t hits = 0;
    for (std::size_t t = 0; hits < n && t < 50 * n; ++t) {
      Rng rng = make_rng(o.seed + 1, t);
      const auto [p, g1, g2] = random_point(rng);
      if (!classify_degradability(p, g1, g2).degradable) continue;
      ++hits;
      worst = std::min(worst, holevo_margin(p, g1, g2, sample_ensemble(rng)));
    }
    return std::pair{hits > 0 && worst >= -1e-9, std::to_string(hits) + " points, min margin " + fmt(worst)};
  }));
  out.push_back(timed("region", "anti-degradable points have non-positive margin", [&] {
    double worst = -kInfinity;
    std::size_t hits = 0;
    for (std::size_t t = 0; hits < n && t < 50 * n; ++t) {
      Rng rng = make_rng(o.seed + 2, t);
      const auto [p, g1, g2] = random_point(rng);
      if (!classify_degradability(p, g1, g2).antidegradable) continue;
      ++hits;
      worst = std::max(worst, holevo_margin(p, g1, g2, sample_ensemble(rng)));
    }
    return std::pair{hits > 0 && worst <= 1e-9, std::to_string(hits) + " points, max margin " + fmt(worst)};
  }));
  out.push_back(timed("region", "p=0.75, gamma=(0.2, 0.81) is less noisy but not degradable", [&] {
    const Degradability d = classify_degradability(0.75, 0.2, 0.81);
    const double pm = p_min(0.2, 0.81);
    double worst = kInfinity;
    Rng rng = make_rng(o.seed + 3, 0);
    for (std::size_t t = 0; t < n; ++t) worst = std::min(worst, holevo_margin(0.75, 0.2, 0.81, sample_ensemble(rng)));
    const bool ok = !d.degradable && !d.antidegradable && std::abs(pm - 0.68066) <= 1e-4 && worst >= -1e-9;
    return std::pair{ok, "p_min " + fmt(pm) + ", min margin " + fmt(worst)};
  }));
  out.push_back(timed("region", "p_min lies in (1/2, 1) on its region", [&] {
    std::size_t bad = 0;
    std::size_t count = 0;
    for (int i = 1; i < 50; ++i) {
      for (int j = 1; j < 50; ++j) {
        const double g1 = i / 50.0;
        const double g2 = j / 50.0;
        if (!(g1 + g2 > 1.0 && g1 < 0.5)) continue;
        ++count;
        const double pm = p_min(g1, g2);
        if (!(pm > 0.5 && pm < 1.0)) ++bad;
      }
    }
    return std::pair{bad == 0 && count > 0, std::to_string(count) + " grid points, " + std::to_string(bad) + " outside"};
  }));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dpi", "bkm", "sandwich", "integral", "region"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "dpi") return suite_dpi(options);
  if (suite == "bkm") return suite_bkm(options);
  if (suite == "sandwich") return suite_sandwich(options);
  if (suite == "integral") return suite_integral(options);
  if (suite == "region") return suite_region(options);
  fail(ErrorCode::kParse, "unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace qchan::cli
