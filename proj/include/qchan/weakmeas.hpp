// Copyright 2026 qchan developers
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

#include <vector>

#include "qchan/channels.hpp"

namespace qchan {

// Weak measurement M = diag(1, sqrt(1-p1)) before amplitude damping and
// reversal N = diag(sqrt(1-p2), 1) after it:
//   rho -> rho' = N E_AD(M rho M^dag) N^dag
// Optimal strategy sets p2 = p1 + lambda (1 - p1); non-optimal p2 = p1;
// None applies bare amplitude damping (M = N = 1).
enum class Strategy { None, NonOptimal, Optimal };

struct WeakMeasConfig {
  double p1 = 0.8;  // in [0, 1)
  Strategy strategy = Strategy::Optimal;
  std::vector<double> lambda_grid;  // sorted ascending, values in [0, 1]
};

struct ProtectionPoint {
  double lambda = 0.0;
  double fidelity = 0.0;             // vs. the input, on the normalized output
  double success_probability = 1.0;  // Tr rho'
};

ProtectionPoint protect(const CMat& rho, double lambda, const WeakMeasConfig& cfg);

std::vector<ProtectionPoint> sweep(const CMat& rho, const WeakMeasConfig& cfg);

}  // namespace qchan
