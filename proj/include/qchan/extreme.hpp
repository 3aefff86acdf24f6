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

#include "qchan/channels.hpp"

namespace qchan {

// A generalized extreme qubit channel: two Kraus operators
//   M_i = R_n(2*varphi) K_i R_m(2*delta)
// with K_0 = diag(cos beta, cos alpha), K_1 = antidiag(sin alpha; sin beta)
// and R_r(2*theta) = exp(-i theta r.sigma).
struct ExtremeParams {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;   // pre-rotation half-angle
  double varphi = 0.0;  // post-rotation half-angle
  Vec3 m_axis = Vec3(0, 0, 1);
  Vec3 n_axis = Vec3(0, 0, 1);
};

// Full 17-parameter description of an arbitrary qubit channel as
// p * E1 + (1-p) * E2.
struct Decomposition17 {
  ExtremeParams e1;
  ExtremeParams e2;
  double p = 0.5;
};

// Circuit settings realizing the K_i pair: 2*gamma_{1,2} = beta -/+ alpha +/- pi/2.
struct CircuitAngles {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

/// exp(-i theta r.sigma) for a unit axis r, theta = two_theta / 2.
CMat rotation(const Vec3& axis, double two_theta);

std::pair<CMat, CMat> kraus_pair(double alpha, double beta);

/// Angles wrapped to (-pi, pi].
CircuitAngles circuit_angles(double alpha, double beta);

KrausChannel build_extreme(const ExtremeParams& p);

ChoiMatrix build_mixture(const Decomposition17& d);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

}  // namespace qchan
