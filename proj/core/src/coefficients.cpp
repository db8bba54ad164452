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

#include "qchan/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qchan/error.hpp"

namespace qchan {
namespace {

void require_open_unit(double x, const char* name) {
  require(std::isfinite(x) && x > 0.0 && x < 1.0, ErrorCode::kBadParam,
          std::string(name) + " must lie in (0,1), got " + std::to_string(x));
}

CoefficientEstimate exact(double v, EstimateKind kind, std::string source) {
  CoefficientEstimate e;
  e.kind = kind;
  e.value = v;
  e.lo = v;
  e.hi = v;
  e.source = std::move(source);
  return e;
}

// Points on the sphere spread by the golden angle.
std::vector<Vec3> fibonacci_sphere(std::size_t n) {
  std::vector<Vec3> out;
  out.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

double f_tilde(const Vec3& wn, const Vec3& yn) {
  const double r = std::min(wn.norm(), 1.0);
  if (r == 0.0) return 1.0;
  const double c2 = std::pow(wn.dot(yn), 2) / (wn.squaredNorm() * yn.squaredNorm());
  return c2 + (1.0 - c2) * aux_f(r);
}

struct Extremes {
  double lo = kInfinity;
  double hi = 0.0;

  void add(double x) {
    if (!std::isfinite(x)) return;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  void normalize() {
    if (lo > hi) lo = hi = 1.0;
  }
};

// K(a) = k(1 − a, a) on a ∈ (0, 1).
double ampdamp_kernel(double a) { return bkm_kernel(1.0 - a, a); }

}  // namespace

std::string_view to_string(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::kExactClosedForm: return "exact-closed-form";
    case EstimateKind::kBoundPair: return "bound-pair";
    case EstimateKind::kConjectured: return "conjectured-closed-form";
    case EstimateKind::kNumerical: return "numerical";
  }
  return "unknown";
}

CoefficientEstimate depol_relative_bounds(std::size_t d, double p1, double p2) {
  require(d >= 2, ErrorCode::kBadParam, "depolarizing bounds need d >= 2");
  require_open_unit(p1, "p1");
  require(std::isfinite(p2) && p2 >= 0.0 && p2 <= p1, ErrorCode::kBadParam,
          "depolarizing bounds need 0 <= p2 <= p1");
  const double a = std::pow((1.0 - p1) / (1.0 - p2), 2);
  const double frac = static_cast<double>(d - 1) / static_cast<double>(d);
  CoefficientEstimate e;
  e.kind = EstimateKind::kBoundPair;
  e.lo = a * p2 / p1;
  e.hi = a * (1.0 - frac * p2) / (1.0 - frac * p1);
  e.source = "depolarizing pair bounds";
  return e;
}

ContractionExpansion depol_qubit_exact(double p1, double p2) {
  require_open_unit(p1, "p1");
  require(std::isfinite(p2) && p2 >= 0.0 && p2 < 1.0, ErrorCode::kBadParam,
          "p2 must lie in [0,1)");
  const double a = std::pow((1.0 - p1) / (1.0 - p2), 2);
  const double b = p2 * (2.0 - p2) / (p1 * (2.0 - p1));
  return {exact(a * std::max(1.0, b), EstimateKind::kExactClosedForm, "qubit depolarizing pair"),
          exact(a * std::min(1.0, b), EstimateKind::kExactClosedForm, "qubit depolarizing pair")};
}

PositiveBound strictly_positive_bounds(const Channel& ch, const DensityMatrix& rho,
                                       const DensityMatrix& sigma) {
  require(rho.dim() == ch.dim_in() && sigma.dim() == ch.dim_in(), ErrorCode::kDimMismatch,
          "states do not match the channel input");
  const std::size_t d = ch.dim_in();
  std::vector<DensityMatrix> probes{rho, sigma};
  for (std::size_t i = 0; i < d; ++i) {
    probes.push_back(DensityMatrix::basis(d, i));
    for (std::size_t j = i + 1; j < d; ++j) {
      for (int k = 0; k < 4; ++k) {
        ComplexVector v = ComplexVector::Zero(d);
        v(i) = 1.0;
        v(j) = std::polar(1.0, 0.5 * std::numbers::pi * k);
        probes.push_back(DensityMatrix::pure(v));
      }
    }
  }
  PositiveBound out;
  out.lambda_min = kInfinity;
  for (const auto& p : probes) {
    const RealVector ev = eigvals_hermitian(ch.apply(p.matrix()));
    out.lambda_min = std::min(out.lambda_min, ev(0));
    out.lambda_max = std::max(out.lambda_max, ev(ev.size() - 1));
  }
  require(out.lambda_min > 1e-12, ErrorCode::kNotStrictlyPositive,
          "channel output is singular on a probe state");
  const double q = 0.5 * hs_norm_sq(ch.apply(ComplexMatrix(rho.matrix() - sigma.matrix())));
  out.bound = {q / out.lambda_max, q / out.lambda_min};
  out.divergence = rel_entropy(ch.apply(rho), ch.apply(sigma));
  out.contains = out.bound.contains(out.divergence, 1e-12);
  return out;
}

CoefficientEstimate dephasing_cp_expansion_bound(const DephasingSpec& gamma,
                                                 const DephasingSpec& gamma_prime, double eps) {
  std::vector<std::string> broken;
  if (!(std::isfinite(eps) && eps > 0.0 && eps < 0.5)) broken.push_back("eps must lie in (0, 1/2)");
  require(gamma.dim() == gamma_prime.dim(), ErrorCode::kDimMismatch,
          "dephasing matrices differ in dimension");
  const ComplexMatrix& g = gamma.gamma();
  const ComplexMatrix& gp = gamma_prime.gamma();
  if (std::isfinite(eps)) {
    if (!is_psd(gp - (1.0 - eps) * g)) broken.push_back("(1-eps)*Gamma <= Gamma' fails");
    if (!is_psd((1.0 + eps) * g - gp)) broken.push_back("Gamma' <= (1+eps)*Gamma fails");
    if (eps > 0.0) {
      ComplexMatrix hat = ComplexMatrix::Zero(g.rows(), g.cols());
      for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
          // Split form avoids cancellation when eps is small.
          if (gp(i, j) != Complex(0.0)) hat(i, j) = (gp(i, j) - g(i, j)) / (eps * gp(i, j)) + g(i, j) / gp(i, j);
        }
      }
      if (!is_psd(hat)) broken.push_back("normalised matrix Gamma-hat is not PSD");
    }
  }
  if (!broken.empty()) {
    std::string msg = "dephasing expansion bound hypotheses failed:";
    for (const auto& b : broken) msg += " " + b + ";";
    fail(ErrorCode::kAssumptionFailed, msg);
  }
  CoefficientEstimate e;
  e.kind = EstimateKind::kBoundPair;
  e.lo = (1.0 - 2.0 * eps) * (1.0 - eps) / ((1.0 + 2.0 * eps) * (1.0 + eps));
  // Diagonal states are left untouched by both maps, so the ratio 1 is attained.
  e.hi = 1.0;
  e.source = "generalized dephasing CP-order bound";
  return e;
}

double lemma_comparison_dephasing_bound(double eps, double c) {
  require(std::isfinite(eps) && eps >= 0.0 && eps <= 1.0 && c > 0.0, ErrorCode::kBadParam,
          "need eps in [0,1] and c > 0");
  return (1.0 - 2.0 * eps) * (1.0 - eps) / (1.0 + c * eps * (1.0 - eps));
}

QubitConstants QubitConstants::swapped() const {
  return {{1.0 / c[1], 1.0 / c[0], 1.0 / c[3], 1.0 / c[2], 1.0 / c[5], 1.0 / c[4]}};
}

QubitBounds qubit_general_bounds(const QubitConstants& k) {
  const auto& c = k.c;
  for (double x : c) require(std::isfinite(x) && x > 0.0, ErrorCode::kBadParam, "constants must be positive");
  require(c[0] >= c[1] && c[2] >= c[3] && c[4] >= c[5], ErrorCode::kBadParam,
          "need c1 >= c2, c3 >= c4, c5 >= c6");
  return {c[2] / (c[1] * c[1] * c[5]), c[3] / (c[0] * c[0] * c[4])};
}

QubitConstants estimate_qubit_condition_constants(const AffineRep& n, const AffineRep& m,
                                                  std::size_t grid) {
  require(grid >= 2, ErrorCode::kBadParam, "grid must be at least 2");
  constexpr double kFloor = 1e-12;
  const std::vector<Vec3> ys = fibonacci_sphere(2 * grid * grid);
  std::vector<Vec3> ws;
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      for (std::size_t k = 0; k < grid; ++k) {
        const auto at = [&](std::size_t t) {
          return -1.0 + 2.0 * static_cast<double>(t) / static_cast<double>(grid - 1);
        };
        const Vec3 w(at(i), at(j), at(k));
        if (w.norm() <= 1.0) ws.push_back(w);
      }
    }
  }
  Extremes r12, r34, r56;
  for (const auto& y : ys) {
    const double a = (n.T * y).norm();
    if (a > kFloor) r12.add((m.T * y).norm() / a);
  }
  for (const auto& w : ws) {
    const Vec3 w1 = n.image(w);
    const Vec3 w2 = m.image(w);
    const double d1 = 1.0 - w1.squaredNorm();
    if (d1 > kFloor) r34.add((1.0 - w2.squaredNorm()) / d1);
    for (const auto& y : ys) {
      const Vec3 y1 = n.T * y;
      const Vec3 y2 = m.T * y;
      if (y1.norm() <= kFloor || y2.norm() <= kFloor) continue;
      const double f1 = f_tilde(w1, y1);
      if (f1 > kFloor) r56.add(f_tilde(w2, y2) / f1);
    }
  }
  r12.normalize();
  r34.normalize();
  r56.normalize();
  return {{r12.hi, r12.lo, r34.hi, r34.lo, r56.hi, r56.lo}};
}

TraceContraction ampdamp_trace_contraction(double gamma) {
  require(std::isfinite(gamma) && gamma >= 0.0 && gamma <= 1.0, ErrorCode::kBadParam,
          "gamma must lie in [0,1]");
  const double eta = std::sqrt(1.0 - gamma);
  return {eta, {1.0 - gamma, eta}};
}

CoefficientEstimate ampdamp_expansion_conjecture(double g1, double g2) {
  require_open_unit(g1, "gamma1");
  require_open_unit(g2, "gamma2");
  return exact(g2 * (1.0 - g1) / (g1 * (1.0 - g2)), EstimateKind::kConjectured,
               "amplitude damping expansion conjecture");
}

CoefficientEstimate ampdamp_contraction_conjecture(double g1, double g2, std::size_t n_grid) {
  require_open_unit(g1, "gamma1");
  require_open_unit(g2, "gamma2");
  require(n_grid >= 2, ErrorCode::kBadParam, "grid must be at least 2");
  const double a1 = 1.0 - g1;
  const double a2 = 1.0 - g2;
  auto ratio = [&](double p) { return ampdamp_kernel(a1 * p) / ampdamp_kernel(a2 * p); };
  double best = -kInfinity;
  std::size_t arg = 1;
  for (std::size_t k = 1; k <= n_grid; ++k) {
    const double r = ratio(static_cast<double>(k) / static_cast<double>(n_grid));
    if (r > best) {
      best = r;
      arg = k;
    }
  }
  const double h = 1.0 / static_cast<double>(n_grid);
  double lo = std::max(h * static_cast<double>(arg - 1), 1e-300);
  double hi = std::min(h * static_cast<double>(arg + 1), 1.0);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = ratio(x1);
  double f2 = ratio(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = ratio(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = ratio(x1);
    }
  }
  best = std::max({best, f1, f2});
  return exact(a1 / a2 * best, EstimateKind::kConjectured, "amplitude damping contraction conjecture");
}

Interval sandwich_check(double eta_tr) {
  require(std::isfinite(eta_tr) && eta_tr >= 0.0 && eta_tr <= 1.0, ErrorCode::kBadParam,
          "trace contraction must lie in [0,1]");
  return {eta_tr * eta_tr, eta_tr};
}

}  // namespace qchan
