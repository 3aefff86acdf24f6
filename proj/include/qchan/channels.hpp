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
#include <variant>
#include <vector>

#include "qchan/numerics.hpp"

namespace qchan {

// Qubit channel representations.
//
// Conventions (fixed project-wide):
//   - Choi matrix J = sum_ij E(|i><j|) (x) |i><j|, system output the first
//     tensor factor; row index = out*2 + in. Unnormalized: Tr J = 2 for a
//     trace-preserving channel, and the partial trace over the output factor
//     equals the identity.
//   - Pauli process matrix chi in the basis (1, X, Y, Z): E(rho) =
//     sum_ij chi_ij Xi_i rho Xi_j. Tr chi = 1 for a trace-preserving channel.

struct KrausChannel {
  std::vector<CMat> ops;  // 1-4 operators, each 2x2
};

struct ChoiMatrix {
  CMat j;  // 4x4
};

struct PauliChi {
  CMat chi;  // 4x4
};

using Channel = std::variant<KrausChannel, ChoiMatrix, PauliChi>;

ChoiMatrix kraus_to_choi(const KrausChannel& k);
KrausChannel choi_to_kraus(const ChoiMatrix& j);  // eigenvalues < 1e-10 dropped
PauliChi choi_to_chi(const ChoiMatrix& j);
ChoiMatrix chi_to_choi(const PauliChi& c);

ChoiMatrix to_choi(const Channel& ch);

/// Apply a channel to a state, natively in whatever representation is given.
CMat apply(const Channel& ch, const CMat& rho);

/// Convex combination of channels; weights >= 0 and normalized by their sum.
ChoiMatrix mix(const std::vector<std::pair<double, Channel>>& entries);

struct ValidationReport {
  bool hermitian = false;
  bool psd = false;
  bool trace_preserving = false;
  bool trace_nonincreasing = false;
  double hermitian_violation = 0.0;
  double psd_violation = 0.0;
  double trace_preserving_violation = 0.0;
  double trace_nonincreasing_violation = 0.0;
  double worst_violation = 0.0;
};

ValidationReport validate(const Channel& ch);

}  // namespace qchan
