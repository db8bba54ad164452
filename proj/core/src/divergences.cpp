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

#include "qchan/divergences.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/error.hpp"
#include "qchan/quadrature.hpp"

namespace qchan {
namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.dim() == b.dim(), ErrorCode::kDimMismatch,
          "states of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

double top(const RealVector& v) { return std::max(v(v.size() - 1), 0.0); }

double sum_positive(const RealVector& v) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::max(v(i), 0.0);
  return s;
}

// p ln(p/q) − p + q ≥ 0. Summing these over eigenpairs weighted by
// overlaps gives D(ρ||σ) + tr σ − tr ρ, which has no first-order
// sensitivity to rounding in the traces, unlike the two-sum form.
double bregman_term(double p, double q) {
  if (p <= 0.0) return q;
  const double u = (p - q) / q;
  if (std::abs(u) < 1e-3) return q * u * u * (0.5 - u / 6.0 + u * u / 12.0 - u * u * u / 20.0);
  return q * ((1.0 + u) * std::log1p(u) - u);
}

// Shared by bkm_qubit and bkm_channel_qubit; `wn`, `yn` already mapped.
double bkm_bloch(const Vec3& wn, const Vec3& yn, double y_zero_tol) {
  const double ny2 = yn.squaredNorm();
  if (std::sqrt(ny2) <= y_zero_tol) return 0.0;
  const double r = std::min(wn.norm(), 1.0);
  const double gap = 1.0 - r * r;
  if (gap <= 1e-14) return kInfinity;
  const double f = aux_f(r);
  const double along = r > 0.0 ? std::pow(wn.dot(yn), 2) / (r * r) : 0.0;
  return 4.0 / gap * (along * (1.0 - f) + ny2 * f);
}

}  // namespace

double rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                   const SupportPolicy& policy) {
  require_same_dim(rho, sigma);
  const Spectrum a = eig_hermitian(rho.matrix());
  const Spectrum b = eig_hermitian(sigma.matrix());
  const Eigen::Index d = a.values.size();
  const double cut_b = policy.eigenvalue_cutoff * top(b.values);
  const double cut_a = policy.eigenvalue_cutoff * top(a.values);
  // overlap(i, j) = |⟨a_i|b_j⟩|²
  const Eigen::MatrixXd overlap = (a.vectors.adjoint() * b.vectors).cwiseAbs2();

  double outside = 0.0;
  double value = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double p = a.values(i) > cut_a ? a.values(i) : 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double q = std::max(b.values(j), 0.0);
      if (b.values(j) <= cut_b) {
        if (p > 0.0) {
          outside += p * overlap(i, j);
        } else {
          value += overlap(i, j) * q;
        }
      } else {
        value += overlap(i, j) * bregman_term(p, q);
      }
    }
  }
  if (outside > policy.eigenvalue_cutoff) return kInfinity;
  return std::max(value, 0.0);
}

double vn_entropy(const DensityMatrix& rho) {
  const RealVector ev = eigvals_hermitian(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.0) s -= ev(i) * std::log(ev(i));
  }
  return std::max(s, 0.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return eigvals_hermitian(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
}

double hockey_stick(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  require_same_dim(rho, sigma);
  require(std::isfinite(s) && s >= 1.0, ErrorCode::kBadParam, "hockey-stick order must be >= 1");
  return sum_positive(eigvals_hermitian(rho.matrix() - s * sigma.matrix()));
}

double bkm_kernel(double a, double b) {
  require(a > 0.0 && b > 0.0, ErrorCode::kDomain, "BKM kernel needs positive arguments");
  if (a == b) return 1.0 / a;
  const double u = (a - b) / b;
  if (std::abs(u) < 1e-4) return (1.0 - u / 2.0 + u * u / 3.0 - u * u * u / 4.0) / b;
  return std::log(a / b) / (a - b);
}

double bkm_metric(const DensityMatrix& sigma, const ComplexMatrix& x, const SupportPolicy& policy) {
  require(static_cast<std::size_t>(x.rows()) == sigma.dim() && x.rows() == x.cols(),
          ErrorCode::kDimMismatch, "perturbation and state differ in dimension");
  const Spectrum s = eig_hermitian(sigma.matrix());
  const ComplexMatrix y = s.vectors.adjoint() * x * s.vectors;
  const double cut = policy.eigenvalue_cutoff * top(s.values);
  const Eigen::Index d = s.values.size();
  double value = 0.0;
  double outside = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double w = std::norm(y(i, j));
      const double li = s.values(i);
      const double lj = s.values(j);
      if (li <= cut || lj <= cut) {
        outside += w;
      } else {
        value += w * bkm_kernel(li, lj);
      }
    }
  }
  if (outside > policy.eigenvalue_cutoff * std::max(1.0, y.squaredNorm())) return kInfinity;
  return value;
}

double aux_f(double x) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, ErrorCode::kDomain,
          "aux_f argument must lie in [0,1]");
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  return (1.0 - x * x) * std::atanh(x) / x;
}

double bkm_qubit(const Vec3& w, const Vec3& y) {
  require(w.allFinite() && w.norm() <= 1.0 + 1e-9, ErrorCode::kBadBloch,
          "Bloch vector norm exceeds 1");
  return bkm_bloch(w, y, 0.0);
}

double bkm_channel_qubit(const AffineRep& aff, const Vec3& w, const Vec3& y) {
  require(w.allFinite() && w.norm() <= 1.0 + 1e-9, ErrorCode::kBadBloch,
          "Bloch vector norm exceeds 1");
  const Vec3 wn = aff.image(w);
  require(wn.norm() <= 1.0 + 1e-9, ErrorCode::kBadBloch, "channel maps outside the Bloch ball");
  return bkm_bloch(wn, aff.T * y, 1e-14 * std::max(1.0, y.norm()));
}

double check_integral_representation_L2(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        std::size_t n_grid, const SupportPolicy& policy) {
  require_same_dim(rho, sigma);
  const RealVector ev = eigvals_hermitian(sigma.matrix());
  require(ev(0) > policy.eigenvalue_cutoff * top(ev), ErrorCode::kSupportViolation,
          "L2 representation needs a full-rank second argument");
  const double exact = rel_entropy(rho, sigma, policy);
  const ComplexMatrix x = rho.matrix() - sigma.matrix();
  const GaussLegendreRule rule = gauss_legendre(n_grid);
  double total = 0.0;
  for (std::size_t i = 0; i < n_grid; ++i) {
    const double s = 0.5 * (rule.nodes[i] + 1.0);
    double inner = 0.0;
    for (std::size_t j = 0; j < n_grid; ++j) {
      const double t = 0.5 * s * (rule.nodes[j] + 1.0);
      inner += rule.weights[j] * bkm_metric(mix(sigma, rho, t), x, policy);
    }
    total += rule.weights[i] * 0.5 * s * inner;
  }
  return std::abs(0.5 * total - exact);
}

double check_integral_representation_L1(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        double s_max, std::size_t n_grid,
                                        const SupportPolicy& policy) {
  require_same_dim(rho, sigma);
  require(s_max > 1.0 && n_grid >= 1, ErrorCode::kBadParam, "need s_max > 1 and n_grid >= 1");
  const double exact = rel_entropy(rho, sigma, policy);
  require(std::isfinite(exact), ErrorCode::kSupportViolation,
          "L1 representation needs supp(rho) inside supp(sigma)");
  const RealVector er = eigvals_hermitian(rho.matrix());
  const RealVector es = eigvals_hermitian(sigma.matrix());
  const double s_star = std::max(er(er.size() - 1) / es(0), es(es.size() - 1) / er(0));
  const bool finite_star = er(0) > 0.0 && es(0) > 0.0 && std::isfinite(s_star);
  const double end = finite_star ? std::min(s_max, std::max(s_star, 1.0)) : s_max;

  auto integrand = [&](double s) {
    return hockey_stick(rho, sigma, s) / s + hockey_stick(sigma, rho, s) / (s * s);
  };
  double value = 0.0;
  if (end > 1.0) {
    const double ratio = std::pow(end, 1.0 / static_cast<double>(n_grid));
    double a = 1.0;
    for (std::size_t k = 0; k < n_grid; ++k) {
      const double b = (k + 1 == n_grid) ? end : a * ratio;
      value += adaptive_simpson(integrand, a, b, 1e-9 / static_cast<double>(n_grid)).value;
      a = b;
    }
  }
  if (end == s_max && (!finite_star || s_max < s_star)) {
    const double e1 = hockey_stick(rho, sigma, s_max);
    const double e2 = hockey_stick(sigma, rho, s_max);
    if (finite_star) {
      // E_s is convex and non-increasing, so it lies below the chord to (s*, 0).
      const double span = s_star - s_max;
      const double c1 = e1 / span * (s_star * std::log(s_star / s_max) - span);
      const double c2 = e2 / span * (s_star * (1.0 / s_max - 1.0 / s_star) - std::log(s_star / s_max));
      value += c1 + c2;
    } else {
      value += e2 / s_max;
    }
  }
  return std::abs(value - exact);
}

}  // namespace qchan
