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

#include <array>
#include <vector>

#include "qchan/extreme.hpp"
#include "qchan/noise.hpp"

namespace qchan::fixtures {

// Published reference data used by the `reproduce` commands and the
// verification suite. Matrices are transcribed at print precision (~1e-4);
// decomposition axes carry only two components in print, the third is
// reconstructed on the + branch.

/// The five reference channels C1..C5 (unnormalized Choi form, trace ~2).
const std::array<CMat, 5>& reference_channels();

/// Fitted 17-parameter decompositions for C1..C5.
const std::array<Decomposition17, 5>& reference_decompositions();

/// Published decomposition errors for C1..C5.
const std::array<double, 5>& reference_errors();

/// The "randomly chosen channel" process matrix (Pauli chi, trace ~1).
CMat arbitrary_chi();

/// Its published 17-parameter decomposition (p = 0.6).
Decomposition17 arbitrary_decomposition();

// One printed row of the noise-channel parameter tables, kept verbatim as an
// annotation. `consistent` marks rows that agree with the closed-form
// relations; the remaining rows are transcribed but not used as oracles.
struct PrintedNoiseRow {
  double lambda = 0.0;
  double alpha1 = 0.0, beta1 = 0.0, gamma1_1 = 0.0, gamma2_1 = 0.0;
  bool has_e2 = false;
  double alpha2 = 0.0, beta2 = 0.0, gamma1_2 = 0.0, gamma2_2 = 0.0;
  bool y_pre_rotation_e2 = false;  // R_m column prints "Y"
  double p = 1.0;
  bool consistent = false;
};

const std::vector<PrintedNoiseRow>& printed_noise_rows(NoiseKind kind);

}  // namespace qchan::fixtures
