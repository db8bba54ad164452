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

#include "qchan/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qchan/error.hpp"
#include "qchan/nelder_mead.hpp"

namespace qchan {
namespace {

constexpr double kPenalty = 1e6;

struct RestartResult {
  RealVector x;
  std::optional<double> value;
  bool converged = false;
};

// Second largest output eigenvalue on a pure input is clearly nonzero.
bool mixed_output(const Channel& ch, const ComplexVector& v) {
  const RealVector ev = eigvals_hermitian(ch.apply(ComplexMatrix(v * v.adjoint())));
  return ev.size() > 1 && ev(ev.size() - 2) > 1e-8;
}

bool is_replacer(const Channel& ch) {
  const std::size_t d = ch.dim_in();
  const ComplexMatrix ref = ch.apply(DensityMatrix::basis(d, 0).matrix());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(i, j) = 1.0;
      const ComplexMatrix expected = i == j ? ref : ComplexMatrix::Zero(ref.rows(), ref.cols());
      if (max_abs(ch.apply(e) - expected) > 1e-10) return false;
    }
  }
  return true;
}

}  // namespace

PurificationVector PurificationVector::from(std::size_t dim, const RealVector& v) {
  require(dim > 0 && static_cast<std::size_t>(v.size()) == 2 * dim * dim, ErrorCode::kBadParam,
          "purification vector must have length 2d^2");
  const double n = v.norm();
  require(n > 0.0 && std::isfinite(n), ErrorCode::kBadParam, "purification vector is zero");
  return PurificationVector(dim, v / n);
}

PurificationVector PurificationVector::random(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  RealVector v(2 * dim * dim);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = g(rng);
  return from(dim, v);
}

PurificationVector PurificationVector::basis(std::size_t dim, std::size_t k) {
  require(k < dim, ErrorCode::kBadParam, "basis index out of range");
  RealVector v = RealVector::Zero(2 * dim * dim);
  v(2 * (k * dim)) = 1.0;
  return PurificationVector(dim, v);
}

DensityMatrix PurificationVector::state() const { return state_from_coords(dim_, v_); }

DensityMatrix state_from_coords(std::size_t dim, const RealVector& v) {
  require(static_cast<std::size_t>(v.size()) == 2 * dim * dim, ErrorCode::kBadParam,
          "purification vector must have length 2d^2");
  ComplexMatrix psi(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t k = 2 * (i * dim + j);
      psi(i, j) = Complex(v(k), v(k + 1));
    }
  }
  const double n2 = psi.squaredNorm();
  require(n2 > 0.0 && std::isfinite(n2), ErrorCode::kBadParam, "purification vector is zero");
  return DensityMatrix::assume_valid(psi * psi.adjoint() / n2);
}

std::optional<double> objective_ratio(const Channel& n, const Channel& m, const DensityMatrix& rho,
                                      const DensityMatrix& sigma, const OptimizerConfig& cfg) {
  require(n.dim_in() == m.dim_in() && rho.dim() == n.dim_in() && sigma.dim() == n.dim_in(),
          ErrorCode::kDimMismatch, "channels and states must share the input dimension");
  const double den = rel_entropy(m.apply(rho), m.apply(sigma), cfg.policy);
  if (!std::isfinite(den) || den < cfg.ratio_guard) return std::nullopt;
  const double num = rel_entropy(n.apply(rho), n.apply(sigma), cfg.policy);
  if (!std::isfinite(num)) return std::nullopt;
  return num / den;
}

std::optional<double> objective_ratio(const Channel& n, const Channel& m,
                                      const PurificationVector& v1, const PurificationVector& v2,
                                      const OptimizerConfig& cfg) {
  require(v1.dim() == v2.dim(), ErrorCode::kDimMismatch, "purifications differ in dimension");
  return objective_ratio(n, m, v1.state(), v2.state(), cfg);
}

CoefficientEstimate estimate_coefficient(const Channel& n, const Channel& m,
                                         const OptimizerConfig& cfg) {
  require(cfg.restarts >= 1, ErrorCode::kBadParam, "need at least one restart");
  require(n.dim_in() == m.dim_in(), ErrorCode::kDimMismatch,
          "channels must share the input dimension");
  const std::size_t d = n.dim_in();
  const auto half = static_cast<Eigen::Index>(2 * d * d);
  const double sign = cfg.mode == OptimizeMode::kMax ? -1.0 : 1.0;

  auto ratio_at = [&](const RealVector& x) -> std::optional<double> {
    const RealVector a = x.head(half);
    const RealVector b = x.tail(half);
    if (a.norm() == 0.0 || b.norm() == 0.0) return std::nullopt;
    return objective_ratio(n, m, state_from_coords(d, a), state_from_coords(d, b), cfg);
  };
  auto objective = [&](const RealVector& x) {
    const auto r = ratio_at(x);
    return r ? sign * *r : kPenalty;
  };

  const std::size_t seeded = cfg.restarts / 10;
  auto run_one = [&](std::size_t idx) {
    Rng rng = make_rng(cfg.seed, idx);
    RealVector x(2 * half);
    if (idx < seeded) {
      const std::size_t k = d - 1 - (idx % d);
      std::normal_distribution<double> g(0.0, 0.05);
      RealVector a = PurificationVector::basis(d, k).coords();
      for (Eigen::Index i = 0; i < half; ++i) a(i) += g(rng);
      RealVector b = a;
      for (Eigen::Index i = 0; i < half; ++i) b(i) += g(rng);
      x << a / a.norm(), b / b.norm();
    } else {
      x << PurificationVector::random(d, rng).coords(), PurificationVector::random(d, rng).coords();
    }
    NelderMeadOptions opts;
    opts.max_iters = cfg.max_iters;
    opts.ftol = cfg.simplex_tol;
    NelderMeadResult res = nelder_mead_minimize(objective, x, opts);
    // Fresh simplices around the incumbent escape premature collapse.
    for (int round = 0; round < 2; ++round) {
      RealVector y = res.x;
      y.head(half).normalize();
      y.tail(half).normalize();
      opts.initial_step = 0.05;
      const NelderMeadResult again = nelder_mead_minimize(objective, y, opts);
      if (!(again.value < res.value)) break;
      res = again;
    }
    RestartResult out;
    out.x = res.x;
    out.value = ratio_at(res.x);
    out.converged = res.converged;
    return out;
  };

  std::vector<RestartResult> results(cfg.restarts);
  const std::size_t workers = std::clamp<std::size_t>(cfg.jobs, 1, cfg.restarts);
  if (workers == 1) {
    for (std::size_t i = 0; i < cfg.restarts; ++i) results[i] = run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < cfg.restarts; i = next++) results[i] = run_one(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  OptimizerRun run;
  run.seed = cfg.seed;
  run.maximize = cfg.mode == OptimizeMode::kMax;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    run.restart_values.push_back(r.value ? *r.value : std::nan(""));
    run.converged.push_back(r.converged);
    if (!r.value) continue;
    if (!best || sign * *r.value < sign * *results[*best].value) best = i;
  }
  require(best.has_value(), ErrorCode::kAssumptionFailed,
          "optimizer found no admissible state pair");
  const RealVector& bx = results[*best].x;
  run.best_value = *results[*best].value;
  run.best_rho = state_from_coords(d, bx.head(half));
  run.best_sigma = state_from_coords(d, bx.tail(half));

  CoefficientEstimate e;
  e.kind = EstimateKind::kNumerical;
  e.value = run.best_value;
  if (cfg.mode == OptimizeMode::kMax) {
    e.lo = run.best_value;
    e.hi = kInfinity;
    e.source = "multi-start Nelder-Mead (sampled supremum, lower estimate)";
  } else {
    e.lo = 0.0;
    e.hi = run.best_value;
    e.source = "multi-start Nelder-Mead (sampled infimum, upper estimate)";
  }
  e.meta = std::move(run);
  return e;
}

std::size_t support_dim(const ComplexMatrix& m, const SupportPolicy& policy) {
  require(is_psd(m), ErrorCode::kNotPSD, "support dimension needs a PSD argument");
  const RealVector ev = eigvals_hermitian(m);
  const double cut = policy.eigenvalue_cutoff * std::max(ev(ev.size() - 1), 0.0);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > cut) ++k;
  }
  return k;
}

NogoWitness nogo_witness(const Channel& ch, double eps, std::uint64_t seed) {
  require(std::isfinite(eps) && eps > 0.0 && eps < 1.0, ErrorCode::kBadParam,
          "eps must lie in (0,1)");
  require(ch.dim_in() >= ch.dim_out(), ErrorCode::kBadParam,
          "witness construction needs dim_in >= dim_out");
  const std::size_t d = ch.dim_in();
  const SupportPolicy policy;

  // (a) a pure input with mixed output; basis first, then random states.
  std::optional<ComplexVector> phi1;
  for (std::size_t k = 0; k < d && !phi1; ++k) {
    const ComplexVector e = ComplexVector::Unit(d, k);
    if (mixed_output(ch, e)) phi1 = e;
  }
  Rng rng = make_rng(seed, 0x6e6f676fULL);
  for (int trial = 0; trial < 256 && !phi1; ++trial) {
    const ComplexVector v = haar_vector(d, rng);
    if (mixed_output(ch, v)) phi1 = v;
  }
  if (!phi1) {
    if (is_replacer(ch)) {
      NogoWitness w{DensityMatrix::basis(d, 0),
                    mix(DensityMatrix::basis(d, 0), DensityMatrix::basis(d, d > 1 ? 1 : 0), eps)};
      w.numerator = rel_entropy(ch.apply(w.rho), ch.apply(w.sigma), policy);
      w.denominator = rel_entropy(w.rho, w.sigma, policy);
      w.ratio = w.numerator / w.denominator;
      return w;
    }
    fail(ErrorCode::kPurityPreserving, "channel maps every pure input to a pure output");
  }

  // (b) orthonormal basis φ₁, …, φ_d by Gram–Schmidt against the standard basis.
  std::vector<ComplexVector> basis{phi1->normalized()};
  for (std::size_t k = 0; k < d && basis.size() < d; ++k) {
    ComplexVector v = ComplexVector::Unit(d, k);
    for (const auto& b : basis) v -= b.dot(v) * b;
    for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() > 1e-8) basis.push_back(v.normalized());
  }

  // (c) first k0 whose successor adds nothing to the output support.
  ComplexMatrix proj = ComplexMatrix::Zero(d, d);
  std::size_t k0 = 0;
  std::size_t prev_dim = 0;
  for (std::size_t k = 0; k < d; ++k) {
    proj += basis[k] * basis[k].adjoint();
    const std::size_t sd = support_dim(ch.apply(proj), policy);
    if (k > 0 && sd == prev_dim) {
      k0 = k;
      break;
    }
    prev_dim = sd;
  }
  require(k0 > 0, ErrorCode::kAssumptionFailed, "no stationary step in the subspace chain");

  // (d) ρ = P_{k0}/k0 and σ_ε leaning towards φ_{k0+1}.
  ComplexMatrix pk = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < k0; ++k) pk += basis[k] * basis[k].adjoint();
  const DensityMatrix rho = DensityMatrix::assume_valid(pk / static_cast<double>(k0));
  const DensityMatrix sigma = mix(rho, DensityMatrix::pure(basis[k0]), eps);
  NogoWitness w{rho, sigma};
  w.k0 = k0;
  w.numerator = rel_entropy(ch.apply(rho), ch.apply(sigma), policy);
  w.denominator = rel_entropy(rho, sigma, policy);
  w.ratio = w.numerator / w.denominator;
  return w;
}

NogoReport nogo_report(const Channel& ch, const std::vector<double>& eps_ladder,
                       std::uint64_t seed) {
  NogoReport r;
  if (is_unitary_channel(ch)) {
    r.outcome = NogoReport::Outcome::kUnitary;
    r.expansion = 1.0;
    return r;
  }
  r.expansion = kInfinity;
  for (double eps : eps_ladder) {
    const NogoWitness w = nogo_witness(ch, eps, seed);
    if (w.k0 == 0) r.outcome = NogoReport::Outcome::kReplacer;
    r.eps.push_back(eps);
    r.ratios.push_back(w.ratio);
    r.expansion = std::min(r.expansion, w.ratio);
  }
  return r;
}

}  // namespace qchan
