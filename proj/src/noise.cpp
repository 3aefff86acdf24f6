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

#include "qchan/noise.hpp"

#include <cmath>
#include <numbers>

namespace qchan {

using std::numbers::pi;

std::string to_string(NoiseKind k) {
  switch (k) {
    case NoiseKind::AmplitudeDamping: return "amplitude_damping";
    case NoiseKind::BitFlip: return "bit_flip";
    case NoiseKind::PhaseFlip: return "phase_flip";
    case NoiseKind::Depolarizing: return "depolarizing";
  }
  return "unknown";
}

std::optional<NoiseKind> noise_kind_from_string(const std::string& s) {
  if (s == "amplitude_damping") return NoiseKind::AmplitudeDamping;
  if (s == "bit_flip") return NoiseKind::BitFlip;
  if (s == "phase_flip") return NoiseKind::PhaseFlip;
  if (s == "depolarizing") return NoiseKind::Depolarizing;
  return std::nullopt;
}

static void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(Errc::LambdaOutOfRange, "lambda must be in [0,1]");
  }
}

KrausChannel make_noise(NoiseKind kind, double lambda) {
  check_lambda(lambda);
  const double s = std::sqrt(lambda);
  const double c = std::sqrt(1.0 - lambda);
  switch (kind) {
    case NoiseKind::AmplitudeDamping: {
      CMat k0(2, 2), k1(2, 2);
      k0 << 1, 0, 0, c;
      k1 << 0, s, 0, 0;
      return KrausChannel{{k0, k1}};
    }
    case NoiseKind::BitFlip:
      return KrausChannel{{c * pauli(0), s * pauli(1)}};
    case NoiseKind::PhaseFlip:
      return KrausChannel{{c * pauli(0), s * pauli(3)}};
    case NoiseKind::Depolarizing: {
      const double q = std::sqrt(lambda / 3.0);
      return KrausChannel{{c * pauli(0), q * pauli(1), q * pauli(2), q * pauli(3)}};
    }
  }
  throw Error(Errc::InvalidArgument, "make_noise: unknown kind");
}

Decomposition17 preset_decomposition(NoiseKind kind, double lambda) {
  check_lambda(lambda);
  Decomposition17 d;  // both extremes default to the identity channel
  switch (kind) {
    case NoiseKind::AmplitudeDamping:
      d.e1.alpha = std::asin(std::sqrt(lambda));
      d.e1.beta = 0.0;
      d.p = 1.0;
      break;
    case NoiseKind::BitFlip:
      d.e1.alpha = d.e1.beta = std::asin(std::sqrt(lambda));
      d.p = 1.0;
      break;
    case NoiseKind::PhaseFlip:
      // identity mixed with the Z channel (alpha = pi gives K0 = Z)
      d.e2.alpha = pi;
      d.e2.beta = 0.0;
      d.p = 1.0 - lambda;
      break;
    case NoiseKind::Depolarizing:
      d.e1.alpha = d.e1.beta = std::asin(std::sqrt(lambda / (3.0 - 2.0 * lambda)));
      d.e2.alpha = d.e2.beta = pi / 4.0;
      d.e2.m_axis = Vec3(0, 1, 0);
      d.e2.delta = pi / 2.0;  // R_m(2*delta) = exp(-i pi/2 Y) = Y up to phase
      d.p = 1.0 - 2.0 * lambda / 3.0;
      break;
  }
  return d;
}

}  // namespace qchan
