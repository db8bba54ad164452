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

#include "qchan/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "qchan/error.hpp"

namespace qchan {

GaussLegendreRule gauss_legendre(std::size_t n) {
  require(n >= 1, ErrorCode::kBadParam, "quadrature needs at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      dp = nd * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t n) {
  const GaussLegendreRule rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * s;
}

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  AdaptiveResult& out;
  int max_depth;

  double eval(double x) {
    ++out.evaluations;
    return f(x);
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= max_depth) {
      out.converged = false;
      return left + right + delta / 15.0;
    }
    if (depth >= 4 && std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

AdaptiveResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                double tol, int max_depth) {
  require(tol > 0.0, ErrorCode::kBadParam, "tolerance must be positive");
  AdaptiveResult out;
  if (a == b) return out;
  Simpson s{f, out, max_depth};
  const double fa = s.eval(a);
  const double fb = s.eval(b);
  const double fm = s.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  out.value = s.recurse(a, b, fa, fm, fb, whole, tol, 0);
  return out;
}

}  // namespace qchan
