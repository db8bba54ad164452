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

#include "qchan/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qchan/error.hpp"

namespace qchan {

NelderMeadResult nelder_mead_minimize(const std::function<double(const RealVector&)>& f,
                                      const RealVector& x0, const NelderMeadOptions& options) {
  const Eigen::Index n = x0.size();
  require(n >= 1, ErrorCode::kBadParam, "Nelder-Mead needs at least one variable");
  const double nd = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / nd;
  const double rho = 0.75 - 0.5 / nd;
  const double shrink = 1.0 - 1.0 / nd;

  std::vector<RealVector> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    pts[i + 1](i) += options.initial_step;
  }
  for (Eigen::Index i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<Eigen::Index> order(n + 1);
  NelderMeadResult out;
  for (out.iterations = 0; out.iterations < options.max_iters; ++out.iterations) {
    std::iota(order.begin(), order.end(), 0);
    // Stable sort keeps tie-breaking deterministic.
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return vals[a] < vals[b]; });
    const Eigen::Index best = order.front();
    const Eigen::Index worst = order.back();
    const Eigen::Index second = order[n - 1];
    if (vals[worst] - vals[best] <= options.ftol * (1.0 + std::abs(vals[best]))) {
      out.converged = true;
      break;
    }
    RealVector centroid = RealVector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) centroid += pts[order[i]];
    centroid /= nd;

    const RealVector xr = centroid + alpha * (centroid - pts[worst]);
    const double fr = f(xr);
    if (fr < vals[best]) {
      const RealVector xe = centroid + gamma * (xr - centroid);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const RealVector xc = outside ? RealVector(centroid + rho * (xr - centroid))
                                  : RealVector(centroid - rho * (centroid - pts[worst]));
    const double fc = f(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = pts[best] + shrink * (pts[i] - pts[best]);
      vals[i] = f(pts[i]);
    }
  }
  const auto it = std::min_element(vals.begin(), vals.end());
  out.value = *it;
  out.x = pts[static_cast<std::size_t>(it - vals.begin())];
  return out;
}

}  // namespace qchan
