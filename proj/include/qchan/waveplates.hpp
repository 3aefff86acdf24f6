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

#include "qchan/numerics.hpp"

namespace qchan {

enum class PlateKind { HWP, QWP };

struct PlateSetting {
  PlateKind kind = PlateKind::HWP;
  double fast_axis_angle = 0.0;  // wrapped to [0, pi); plates are pi-periodic
};

struct PlateStack {
  std::vector<PlateSetting> plates;  // applied right-to-left as matrices
  CMat matrix() const;
};

/// Jones matrix of a single plate at fast-axis angle tau (HWP) or xi (QWP):
///   U_HWP(tau) = [[cos 2tau, -sin 2tau], [-sin 2tau, -cos 2tau]]
///   U_QWP(xi)  = [[1+i cos 2xi, -i sin 2xi], [-i sin 2xi, 1-i cos 2xi]]/sqrt(2)
CMat plate_matrix(const PlateSetting& p);

/// Two-HWP y rotation: [HWP(0), HWP(gamma/2)] composes to R_y(2*gamma) exactly.
PlateStack compile_ry(double two_gamma);

/// QWP-HWP-QWP stack realizing R_r(2*theta) up to global phase.
/// Throws Error(DegenerateRotation) only on a malformed axis; the zero-angle
/// case returns an identity-equivalent stack.
PlateStack compile_rotation(const Vec3& axis, double two_theta);

/// 1 - |Tr(U^dag V)| / 2: zero iff U = V up to global phase.
double phase_distance(const CMat& u, const CMat& v);

/// Wrap a plate angle to [0, pi).
double wrap_plate_angle(double a);

}  // namespace qchan
