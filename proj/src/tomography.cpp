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

#include "qchan/tomography.hpp"

#include <algorithm>
#include <array>

#include "qchan/randomgen.hpp"

namespace qchan {

namespace {

CMat probe_state(int idx) {
  CMat rho(2, 2);
  switch (idx) {
    case 0: rho << 1, 0, 0, 0; break;                                  // |H>
    case 1: rho << 0, 0, 0, 1; break;                                  // |V>
    case 2: rho << 0.5, 0.5, 0.5, 0.5; break;                          // |D>
    default:
      rho << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5;              // |L>
  }
  return rho;
}

}  // namespace

PauliChi simulate_qpt(const Channel& ch, const QptConfig& cfg) {
  // expectation[input][basis], basis 0..2 -> X, Y, Z
  std::array<std::array<double, 3>, 4> expval{};
  for (int in = 0; in < 4; ++in) {
    const CMat out = qchan::apply(ch, probe_state(in));
    for (int b = 0; b < 3; ++b) {
      const double t = (pauli(b + 1) * out).trace().real();
      if (cfg.exact()) {
        expval[in][b] = t;
      } else {
        // Projective measurement: outcome +1 with probability (1+t)/2.
        RngStream rng(cfg.seed, static_cast<std::uint64_t>(in) * 3 + b);
        const double p_plus = std::clamp((1.0 + t) / 2.0, 0.0, 1.0);
        long long plus = 0;
        for (long long k = 0; k < cfg.shots; ++k) {
          if (rng.uniform() < p_plus) ++plus;
        }
        expval[in][b] = 2.0 * static_cast<double>(plus) / static_cast<double>(cfg.shots) - 1.0;
      }
    }
  }

  // Reconstruct the channel's action on the operator basis. Trace-preservation
  // is assumed (outputs taken to have unit trace), matching the probe protocol.
  auto reconstruct = [&](int in) {
    CMat rho(2, 2);
    const double x = expval[in][0], y = expval[in][1], z = expval[in][2];
    rho << (1 + z) / 2.0, Complex(x, -y) / 2.0, Complex(x, y) / 2.0, (1 - z) / 2.0;
    return rho;
  };
  const CMat eh = reconstruct(0);  // E(|0><0|)
  const CMat ev = reconstruct(1);  // E(|1><1|)
  const CMat ex = 2.0 * reconstruct(2) - eh - ev;  // E(X)
  const CMat ey = 2.0 * reconstruct(3) - eh - ev;  // E(Y)
  const CMat e01 = (ex + Complex(0, 1) * ey) / 2.0;  // E(|0><1|)
  const CMat e10 = (ex - Complex(0, 1) * ey) / 2.0;  // E(|1><0|)

  CMat j = CMat::Zero(4, 4);
  const CMat* blocks[2][2] = {{&eh, &e01}, {&e10, &ev}};
  for (int i = 0; i < 2; ++i)
    for (int jj = 0; jj < 2; ++jj)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) j(a * 2 + i, b * 2 + jj) = (*blocks[i][jj])(a, b);

  j = (j + j.adjoint()) / 2.0;
  return choi_to_chi(ChoiMatrix{j});
}

}  // namespace qchan
