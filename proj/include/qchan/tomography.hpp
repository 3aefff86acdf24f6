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

#include "qchan/channels.hpp"

namespace qchan {

struct QptConfig {
  long long shots = -1;  // <= 0 means exact expectation values
  std::uint64_t seed = 0;
  bool exact() const { return shots <= 0; }
};

/// Simulated process tomography: probe with {|H>, |V>, |D>, |L>}, measure
/// X/Y/Z expectations on each output (exactly or from binomial counts), and
/// reconstruct chi by linear inversion. The output is Hermitized but not
/// projected to PSD; shot noise may produce non-physical matrices.
PauliChi simulate_qpt(const Channel& ch, const QptConfig& cfg);

}  // namespace qchan
