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

#include "qchan/extreme.hpp"

#include <cmath>
#include <numbers>

namespace qchan {

using std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  if (a > pi) a -= 2.0 * pi;
  return a;
}

CMat rotation(const Vec3& axis, double two_theta) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw Error(Errc::NonUnitAxis, "rotation: axis must be a unit vector");
  }
  const double theta = two_theta / 2.0;
  const CMat rs = axis(0) * pauli(1) + axis(1) * pauli(2) + axis(2) * pauli(3);
  return std::cos(theta) * pauli(0) - Complex(0, 1) * std::sin(theta) * rs;
}

std::pair<CMat, CMat> kraus_pair(double alpha, double beta) {
  CMat k0(2, 2), k1(2, 2);
  k0 << std::cos(beta), 0, 0, std::cos(alpha);
  k1 << 0, std::sin(alpha), std::sin(beta), 0;
  return {k0, k1};
}

CircuitAngles circuit_angles(double alpha, double beta) {
  CircuitAngles c;
  c.gamma1 = wrap_angle((beta - alpha + pi / 2.0) / 2.0);
  c.gamma2 = wrap_angle((beta + alpha - pi / 2.0) / 2.0);
  return c;
}

KrausChannel build_extreme(const ExtremeParams& p) {
  const CMat pre = rotation(p.m_axis, 2.0 * p.delta);
  const CMat post = rotation(p.n_axis, 2.0 * p.varphi);
  auto [k0, k1] = kraus_pair(p.alpha, p.beta);
  return KrausChannel{{post * k0 * pre, post * k1 * pre}};
}

ChoiMatrix build_mixture(const Decomposition17& d) {
  if (d.p < 0.0 || d.p > 1.0) {
    throw Error(Errc::OutOfRange, "build_mixture: p must be in [0,1]");
  }
  const CMat j1 = kraus_to_choi(build_extreme(d.e1)).j;
  const CMat j2 = kraus_to_choi(build_extreme(d.e2)).j;
  return ChoiMatrix{d.p * j1 + (1.0 - d.p) * j2};
}

}  // namespace qchan
