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

#include "qchan/channels.hpp"

#include <cmath>

namespace qchan {

namespace {

// Column-stacks a 2x2 operator K as the 4-vector (K (x) 1)|Omega>,
// |Omega> = sum_i |ii>; component (out*2 + in) = K(out, in).
CVec vectorize(const CMat& k) {
  CVec v(4);
  for (int out = 0; out < 2; ++out)
    for (int in = 0; in < 2; ++in) v(out * 2 + in) = k(out, in);
  return v;
}

CMat devectorize(const CVec& v) {
  CMat k(2, 2);
  for (int out = 0; out < 2; ++out)
    for (int in = 0; in < 2; ++in) k(out, in) = v(out * 2 + in);
  return k;
}

}  // namespace

ChoiMatrix kraus_to_choi(const KrausChannel& k) {
  CMat j = CMat::Zero(4, 4);
  for (const CMat& op : k.ops) {
    const CVec v = vectorize(op);
    j += v * v.adjoint();
  }
  return ChoiMatrix{j};
}

KrausChannel choi_to_kraus(const ChoiMatrix& j) {
  EigResult eig = hermitian_eig(j.j);
  KrausChannel out;
  for (int k = 0; k < 4; ++k) {
    const double lam = eig.values(k);
    if (lam < -kPsdClamp) {
      throw Error(Errc::NotPsd, "choi_to_kraus: Choi matrix not PSD");
    }
    if (lam < 1e-10) continue;  // print/round-off noise must not create Kraus ops
    out.ops.push_back(devectorize(std::sqrt(lam) * eig.vectors.col(k)));
  }
  if (out.ops.empty()) out.ops.push_back(CMat::Zero(2, 2));
  return out;
}

PauliChi choi_to_chi(const ChoiMatrix& j) {
  // <vec(Xi_i), vec(Xi_j)> = 2 delta_ij, so the basis matrices B_ij =
  // vec(Xi_i) vec(Xi_j)^dag have Hilbert-Schmidt norm-square 4.
  CMat chi(4, 4);
  for (int a = 0; a < 4; ++a) {
    const CVec va = vectorize(pauli(a));
    for (int b = 0; b < 4; ++b) {
      const CVec vb = vectorize(pauli(b));
      chi(a, b) = (va.adjoint() * j.j * vb)(0) / 4.0;
    }
  }
  return PauliChi{chi};
}

ChoiMatrix chi_to_choi(const PauliChi& c) {
  CMat j = CMat::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    const CVec va = vectorize(pauli(a));
    for (int b = 0; b < 4; ++b) {
      const CVec vb = vectorize(pauli(b));
      j += c.chi(a, b) * va * vb.adjoint();
    }
  }
  return ChoiMatrix{j};
}

ChoiMatrix to_choi(const Channel& ch) {
  return std::visit(
      [](const auto& c) -> ChoiMatrix {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, KrausChannel>) return kraus_to_choi(c);
        else if constexpr (std::is_same_v<T, ChoiMatrix>) return c;
        else return chi_to_choi(c);
      },
      ch);
}

CMat apply(const Channel& ch, const CMat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw Error(Errc::InvalidArgument, "apply: state must be 2x2");
  }
  return std::visit(
      [&](const auto& c) -> CMat {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, KrausChannel>) {
          CMat out = CMat::Zero(2, 2);
          for (const CMat& op : c.ops) out += op * rho * op.adjoint();
          return out;
        } else if constexpr (std::is_same_v<T, ChoiMatrix>) {
          // E(rho)(a,b) = sum_ij J[(a,i),(b,j)] rho(i,j)
          CMat out = CMat::Zero(2, 2);
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                  out(a, b) += c.j(a * 2 + i, b * 2 + j) * rho(i, j);
          return out;
        } else {
          CMat out = CMat::Zero(2, 2);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              out += c.chi(a, b) * pauli(a) * rho * pauli(b);
          return out;
        }
      },
      ch);
}

ChoiMatrix mix(const std::vector<std::pair<double, Channel>>& entries) {
  double total = 0.0;
  for (const auto& [w, ch] : entries) {
    if (w < 0.0) throw Error(Errc::InvalidArgument, "mix: negative weight");
    total += w;
  }
  if (total <= 0.0) throw Error(Errc::AllZeroWeights, "mix: weights sum to zero");
  CMat j = CMat::Zero(4, 4);
  for (const auto& [w, ch] : entries) j += (w / total) * to_choi(ch).j;
  return ChoiMatrix{j};
}

ValidationReport validate(const Channel& ch) {
  const CMat j = to_choi(ch).j;
  ValidationReport r;

  r.hermitian_violation = (j - j.adjoint()).cwiseAbs().maxCoeff();
  r.hermitian = r.hermitian_violation <= 1e-9;

  const CMat h = (j + j.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> solver(h);
  const double min_eig = solver.eigenvalues().minCoeff();
  r.psd_violation = min_eig < 0.0 ? -min_eig : 0.0;
  r.psd = min_eig >= -kPsdClamp;

  // Partial trace over the output factor; identity iff trace-preserving.
  CMat t = CMat::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int jj = 0; jj < 2; ++jj)
      for (int a = 0; a < 2; ++a) t(i, jj) += j(a * 2 + i, a * 2 + jj);

  r.trace_preserving_violation = (t - CMat::Identity(2, 2)).cwiseAbs().maxCoeff();
  r.trace_preserving = r.trace_preserving_violation <= 1e-9;

  Eigen::SelfAdjointEigenSolver<CMat> ts((t + t.adjoint()) / 2.0 - CMat::Identity(2, 2));
  const double excess = ts.eigenvalues().maxCoeff();
  r.trace_nonincreasing_violation = excess > 0.0 ? excess : 0.0;
  r.trace_nonincreasing = excess <= 1e-9;

  r.worst_violation = std::max({r.hermitian_violation, r.psd_violation,
                                r.trace_nonincreasing_violation});
  return r;
}

}  // namespace qchan
