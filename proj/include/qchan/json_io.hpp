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

#include <string>

#include "qchan/decomposer.hpp"
#include "qchan/metrics.hpp"
#include "qchan/waveplates.hpp"

namespace qchan {

// Channel schema: {"repr": "kraus"|"choi"|"pauli_chi", "data": ...} where
// data is a list of 2x2 matrices for "kraus" and a single 4x4 matrix
// otherwise; matrix entries are [re, im] pairs.
std::string channel_to_json(const Channel& ch, int indent = 2);
Channel channel_from_json(const std::string& text);

// Decomposition schema mirrors the published field names: per-extreme
// {alpha, beta, delta, varphi, m1, m2, n1, n2} plus the mixing weight p.
// m3/n3 are emitted as well so negative-branch axes survive a round trip;
// import reconstructs the + branch when they are absent.
std::string decomposition_to_json(const Decomposition17& d, int indent = 2);
Decomposition17 decomposition_from_json(const std::string& text);

std::string result_to_json(const DecompositionResult& r, int indent = 2);

std::string metric_report_to_json(const MetricReport& r, int indent = 2);

std::string plate_stack_to_json(const PlateStack& s, int indent = 2);

}  // namespace qchan
