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

#include "qchan/waveplates.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qchan/extreme.hpp"

namespace qchan {

using std::numbers::pi;

double wrap_plate_angle(double a) {
  a = std::fmod(a, pi);
  if (a < 0.0) a += pi;
  return a;
}

CMat plate_matrix(const PlateSetting& p) {
  const double c = std::cos(2.0 * p.fast_axis_angle);
  const double s = std::sin(2.0 * p.fast_axis_angle);
  CMat m(2, 2);
  if (p.kind == PlateKind::HWP) {
    m << c, -s, -s, -c;
  } else {
    m << Complex(1, c), Complex(0, -s), Complex(0, -s), Complex(1, -c);
    m /= std::sqrt(2.0);
  }
  return m;
}

CMat PlateStack::matrix() const {
  CMat m = CMat::Identity(2, 2);
  for (const PlateSetting& p : plates) m = m * plate_matrix(p);
  return m;
}

double phase_distance(const CMat& u, const CMat& v) {
  return 1.0 - std::abs((u.adjoint() * v).trace()) / 2.0;
}

PlateStack compile_ry(double two_gamma) {
  const double tau = two_gamma / 4.0;  // tau = gamma/2
  return PlateStack{{{PlateKind::HWP, wrap_plate_angle(0.0)},
                     {PlateKind::HWP, wrap_plate_angle(tau)}}};
}

// The QWP(xi1) HWP(tau) QWP(xi2) product reduces, with
//   Theta = xi1 - xi2, Lambda = 2*tau - xi1 - xi2, Sigma = xi1 + xi2,
// to i * [cos(Theta)cos(Lambda) 1 + i q.sigma] where
//   q = (sin(Lambda)cos(Sigma), cos(Lambda)sin(Theta), sin(Lambda)sin(Sigma)).
// Matching exp(-i theta r.sigma) = cos(theta) 1 - i sin(theta) r.sigma gives
//   cos(Theta)cos(Lambda) = cos(theta),  q = -sin(theta) r,
// which is solved below for (Theta, Lambda, Sigma) and then the plate angles.
PlateStack compile_rotation(const Vec3& axis, double two_theta) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw Error(Errc::DegenerateRotation, "compile_rotation: axis must be a unit vector");
  }
  double theta = two_theta / 2.0;
  Vec3 r = axis;
  if (std::sin(theta) < 0.0) {  // normalize to sin(theta) >= 0
    theta = -theta;
    r = -r;
  }
  const double s = std::sin(theta);
  const double ct = std::cos(theta);

  if (s < 1e-12) {
    // Identity (or -identity) up to phase: two parallel HWPs cancel exactly.
    return PlateStack{{{PlateKind::QWP, 0.0}, {PlateKind::HWP, 0.0}, {PlateKind::QWP, 0.0}}};
  }

  const double axz = std::hypot(r(0), r(2));
  const double sin_lambda = s * axz;                 // in [0, 1]
  const double sigma = axz > 1e-14 ? std::atan2(-r(2) * s, -r(0) * s) : 0.0;
  const double k = std::sqrt(std::max(0.0, 1.0 - sin_lambda * sin_lambda));

  const CMat target = rotation(r, 2.0 * theta);

  PlateStack best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (const double sign : {1.0, -1.0}) {
    const double cos_lambda = sign * k;
    const double lambda = std::atan2(sin_lambda, cos_lambda);
    // cos(Theta)*cos(Lambda) = cos(theta), -cos(Lambda)*sin(Theta) = B*sin(theta)
    const double th = (std::abs(cos_lambda) > 1e-14)
                          ? std::atan2(-r(1) * s * sign, ct * sign)
                          : 0.0;
    const double xi1 = (sigma + th) / 2.0;
    const double xi2 = (sigma - th) / 2.0;
    const double tau = (lambda + sigma) / 2.0;

    PlateStack cand{{{PlateKind::QWP, wrap_plate_angle(xi1)},
                     {PlateKind::HWP, wrap_plate_angle(tau)},
                     {PlateKind::QWP, wrap_plate_angle(xi2)}}};
    if (phase_distance(cand.matrix(), target) > 1e-9) continue;
    // Mechanical economy: prefer small deflections from the vertical axis.
    double cost = 0.0;
    for (const PlateSetting& p : cand.plates) {
      cost += std::min(p.fast_axis_angle, pi - p.fast_axis_angle);
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = cand;
    }
  }
  if (best.plates.empty()) {
    throw Error(Errc::DegenerateRotation, "compile_rotation: no consistent plate solution");
  }
  return best;
}

}  // namespace qchan
