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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qchan {

/// Gauss–Legendre rule on [−1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// ∫_a^b f using an n-point Gauss–Legendre rule.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t n);

struct AdaptiveResult {
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// Adaptive Simpson with Richardson correction; absolute tolerance.
AdaptiveResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                double tol, int max_depth = 48);

}  // namespace qchan
