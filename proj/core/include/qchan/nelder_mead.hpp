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

#include "qchan/linalg.hpp"

namespace qchan {

struct NelderMeadOptions {
  std::size_t max_iters = 2000;
  /// Converged once f_max − f_min ≤ ftol·(1 + |f_min|) over the simplex.
  double ftol = 1e-10;
  double initial_step = 0.2;
};

struct NelderMeadResult {
  RealVector x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Minimises f with the dimension-adaptive Nelder–Mead coefficients
/// (reflection 1, expansion 1 + 2/n, contraction 3/4 − 1/2n, shrink 1 − 1/n).
NelderMeadResult nelder_mead_minimize(const std::function<double(const RealVector&)>& f,
                                      const RealVector& x0, const NelderMeadOptions& options);

}  // namespace qchan
