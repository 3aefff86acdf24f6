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

#include <cstdint>
#include <optional>

#include "qchan/extreme.hpp"

namespace qchan {

struct DecomposeConfig {
  double tolerance = 1e-6;
  int max_restarts = 20;
  int max_iterations = 4000;  // Nelder-Mead iterations per restart stage
  std::uint64_t seed = 0;
};

struct DecompositionResult {
  Decomposition17 params;
  double achieved_error = 0.0;
  long objective_evals = 0;
  int restart_index = 0;
  bool converged = false;  // achieved_error <= tolerance
};

/// Trace distance between the trial mixture and the target, both Choi
/// matrices normalized to unit trace.
double objective(const Decomposition17& d, const ChoiMatrix& target);

/// Fit a 17-parameter decomposition to a CPTP target by Nelder-Mead with
/// seeded random restarts. Deterministic given (target, cfg, init); restart 0
/// starts from `init` when supplied, otherwise from identity-like parameters.
DecompositionResult decompose(const Channel& target, const DecomposeConfig& cfg,
                              const std::optional<Decomposition17>& init = std::nullopt);

}  // namespace qchan
