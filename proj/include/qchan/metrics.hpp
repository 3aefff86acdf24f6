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

#include <utility>

#include "qchan/channels.hpp"

namespace qchan {

struct MetricReport {
  double process_fidelity = 0.0;
  double average_fidelity = 0.0;
  double trace_distance = 0.0;
  std::pair<double, double> fid_dist_bounds{0.0, 0.0};
  std::pair<double, double> diamond_bounds{0.0, 0.0};
};

/// Density-matrix fidelity of the trace-normalized Choi matrices,
/// (Tr sqrt(sqrt(a) b sqrt(a)))^2. Requires both channels trace-preserving
/// within 1e-6.
double process_fidelity(const Channel& a, const Channel& b);

/// (2 fp + 1) / 3.
double average_fidelity(double fp);

/// Half trace-norm of the difference of trace-normalized Choi matrices.
double trace_distance(const Channel& a, const Channel& b);

/// (1 - sqrt(fp), sqrt(1 - fp)).
std::pair<double, double> fidelity_distance_bounds(double fp);

/// Bracket for the diamond distance: upper = |J_a - J_b|_1 / 2 on unnormalized
/// Choi matrices; lower = max of upper/2 and a 1-degree Bloch-sphere scan of
/// output trace distances over pure inputs.
std::pair<double, double> diamond_bounds(const Channel& a, const Channel& b);

MetricReport compare_channels(const Channel& a, const Channel& b);

}  // namespace qchan
