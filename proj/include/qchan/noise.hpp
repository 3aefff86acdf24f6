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

#include <optional>
#include <string>

#include "qchan/extreme.hpp"

namespace qchan {

enum class NoiseKind { AmplitudeDamping, BitFlip, PhaseFlip, Depolarizing };

std::string to_string(NoiseKind k);
std::optional<NoiseKind> noise_kind_from_string(const std::string& s);

/// Closed-form Kraus construction; lambda in [0,1].
KrausChannel make_noise(NoiseKind kind, double lambda);

/// Extreme-channel decomposition derived from closed forms:
///   amplitude damping: alpha = asin(sqrt(lambda)), beta = 0, p = 1
///   bit flip:          alpha = beta = asin(sqrt(lambda)), p = 1
///   phase flip:        mixture of identity and the Z channel, p = 1 - lambda
///   depolarizing:      bit-flip-like E1 with sin^2 alpha = lambda/(3-2*lambda),
///                      E2 = (Y.Y + Z.Z)/2 (alpha = beta = pi/4, Y pre-rotation),
///                      p = 1 - 2*lambda/3
/// build_mixture(result) reproduces make_noise(kind, lambda) exactly.
Decomposition17 preset_decomposition(NoiseKind kind, double lambda);

}  // namespace qchan
