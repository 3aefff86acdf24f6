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

#include "qchan/weakmeas.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/noise.hpp"

namespace qchan {

namespace {

double state_fidelity(const CMat& rho, const CMat& sigma) {
  const CMat sr = psd_sqrt((rho + rho.adjoint()) / 2.0);
  const CMat inner = sr * ((sigma + sigma.adjoint()) / 2.0) * sr;
  const CMat root = psd_sqrt((inner + inner.adjoint()) / 2.0);
  const double f = root.trace().real();
  return std::clamp(f * f, 0.0, 1.0);
}

}  // namespace

ProtectionPoint protect(const CMat& rho, double lambda, const WeakMeasConfig& cfg) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(Errc::LambdaOutOfRange, "protect: lambda must be in [0,1]");
  }
  if (!(cfg.p1 >= 0.0 && cfg.p1 < 1.0)) {
    throw Error(Errc::OutOfRange, "protect: p1 must be in [0,1)");
  }

  double p1 = cfg.p1, p2 = 0.0;
  switch (cfg.strategy) {
    case Strategy::None:
      p1 = 0.0;
      p2 = 0.0;
      break;
    case Strategy::NonOptimal:
      p2 = p1;
      break;
    case Strategy::Optimal:
      p2 = p1 + lambda * (1.0 - p1);
      break;
  }

  CMat m = CMat::Identity(2, 2), n = CMat::Identity(2, 2);
  m(1, 1) = std::sqrt(1.0 - p1);
  n(0, 0) = std::sqrt(1.0 - p2);

  const Channel ad = make_noise(NoiseKind::AmplitudeDamping, lambda);
  const CMat rho_prime = n * qchan::apply(ad, m * rho * m.adjoint()) * n.adjoint();
  const double succ = rho_prime.trace().real();
  if (succ < 1e-12) {
    throw Error(Errc::ZeroSuccessProbability, "protect: success probability vanishes");
  }

  ProtectionPoint pt;
  pt.lambda = lambda;
  pt.success_probability = succ;
  pt.fidelity = state_fidelity(rho, rho_prime / succ);
  return pt;
}

std::vector<ProtectionPoint> sweep(const CMat& rho, const WeakMeasConfig& cfg) {
  std::vector<ProtectionPoint> out;
  out.reserve(cfg.lambda_grid.size());
  for (double lambda : cfg.lambda_grid) out.push_back(protect(rho, lambda, cfg));
  return out;
}

}  // namespace qchan
