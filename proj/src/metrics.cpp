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

#include "qchan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qchan {

namespace {

CMat normalized_choi(const Channel& ch) {
  CMat j = to_choi(ch).j;
  const double tr = j.trace().real();
  if (tr <= 0.0) {
    throw Error(Errc::InvalidChannel, "channel has non-positive Choi trace");
  }
  return j / tr;
}

void require_tp(const Channel& ch) {
  const ValidationReport r = validate(ch);
  if (r.trace_preserving_violation > 1e-6 || r.psd_violation > 1e-6) {
    throw Error(Errc::InvalidChannel, "channel not CPTP within 1e-6");
  }
}

// Trace distance of two Hermitian 2x2 matrices, closed form.
double state_trace_distance(const CMat& a, const CMat& b) {
  const CMat d = a - b;
  const double t = d.trace().real();
  const double det = (d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * det));
  const double l1 = (t + disc) / 2.0;
  const double l2 = (t - disc) / 2.0;
  return (std::abs(l1) + std::abs(l2)) / 2.0;
}

}  // namespace

double process_fidelity(const Channel& a, const Channel& b) {
  require_tp(a);
  require_tp(b);
  const CMat ra = normalized_choi(a);
  const CMat rb = normalized_choi(b);
  const CMat sa = psd_sqrt((ra + ra.adjoint()) / 2.0);
  const CMat inner = sa * ((rb + rb.adjoint()) / 2.0) * sa;
  const CMat root = psd_sqrt((inner + inner.adjoint()) / 2.0);
  const double f = root.trace().real();
  return std::clamp(f * f, 0.0, 1.0);
}

double average_fidelity(double fp) {
  if (!(fp >= 0.0 && fp <= 1.0)) {
    throw Error(Errc::OutOfRange, "average_fidelity: fp must be in [0,1]");
  }
  return (2.0 * fp + 1.0) / 3.0;
}

double trace_distance(const Channel& a, const Channel& b) {
  return trace_norm(normalized_choi(a) - normalized_choi(b)) / 2.0;
}

std::pair<double, double> fidelity_distance_bounds(double fp) {
  if (!(fp >= 0.0 && fp <= 1.0)) {
    throw Error(Errc::OutOfRange, "fidelity_distance_bounds: fp must be in [0,1]");
  }
  return {1.0 - std::sqrt(fp), std::sqrt(1.0 - fp)};
}

std::pair<double, double> diamond_bounds(const Channel& a, const Channel& b) {
  const CMat ja = to_choi(a).j;
  const CMat jb = to_choi(b).j;
  const CMat dj = ja - jb;
  const double upper = trace_norm(dj) / 2.0;
  double lower = upper / 2.0;

  // Output distinguishability over pure inputs on a 1-degree grid; this is a
  // valid lower bound since the diamond norm includes ancilla-free inputs.
  using std::numbers::pi;
  const double step = pi / 180.0;
  for (int it = 0; it <= 180; ++it) {
    const double th = it * step;
    const double z = std::cos(th);
    const double s = std::sin(th);
    const int nphi = (it == 0 || it == 180) ? 1 : 360;
    for (int ip = 0; ip < nphi; ++ip) {
      const double ph = ip * step;
      CMat rho(2, 2);
      const double x = s * std::cos(ph), y = s * std::sin(ph);
      rho << (1 + z) / 2.0, Complex(x, -y) / 2.0, Complex(x, y) / 2.0, (1 - z) / 2.0;
      // Apply the Choi difference directly.
      CMat out = CMat::Zero(2, 2);
      for (int aa = 0; aa < 2; ++aa)
        for (int bb = 0; bb < 2; ++bb)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              out(aa, bb) += dj(aa * 2 + i, bb * 2 + j) * rho(i, j);
      lower = std::max(lower, state_trace_distance(out, CMat::Zero(2, 2)));
    }
  }
  return {std::min(lower, upper), upper};
}

MetricReport compare_channels(const Channel& a, const Channel& b) {
  MetricReport r;
  r.process_fidelity = process_fidelity(a, b);
  r.average_fidelity = average_fidelity(r.process_fidelity);
  r.trace_distance = trace_distance(a, b);
  r.fid_dist_bounds = fidelity_distance_bounds(r.process_fidelity);
  r.diamond_bounds = diamond_bounds(a, b);
  return r;
}

}  // namespace qchan
