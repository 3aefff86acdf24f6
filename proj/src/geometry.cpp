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

#include "qchan/geometry.hpp"

#include <cmath>
#include <numbers>

namespace qchan {

BlochPoint bloch_vector(const CMat& rho) {
  BlochPoint v;
  v.x = (pauli(1) * rho).trace().real();
  v.y = (pauli(2) * rho).trace().real();
  v.z = (pauli(3) * rho).trace().real();
  return v;
}

CMat state_from_bloch(const BlochPoint& v) {
  CMat rho(2, 2);
  rho << (1 + v.z) / 2.0, Complex(v.x, -v.y) / 2.0,
      Complex(v.x, v.y) / 2.0, (1 - v.z) / 2.0;
  return rho;
}

std::vector<CloudPoint> image_cloud(const Channel& ch, int n_samples) {
  if (n_samples < 1) {
    throw Error(Errc::InvalidArgument, "image_cloud: need at least one sample");
  }
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<CloudPoint> out;
  out.reserve(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / n_samples;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * std::numbers::pi * k / golden;
    CloudPoint pt;
    pt.input = {r * std::cos(phi), r * std::sin(phi), z};
    pt.output = bloch_vector(qchan::apply(ch, state_from_bloch(pt.input)));
    out.push_back(pt);
  }
  return out;
}

}  // namespace qchan
