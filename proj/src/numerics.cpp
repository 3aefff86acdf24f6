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

#include "qchan/numerics.hpp"

#include <cmath>

namespace qchan {

static double max_abs(const CMat& m) {
  return m.cwiseAbs().maxCoeff();
}

EigResult hermitian_eig(const CMat& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::InvalidArgument, "hermitian_eig: matrix must be square");
  }
  if (max_abs(m - m.adjoint()) > kHermTol) {
    throw Error(Errc::NonHermitian, "hermitian_eig: input not Hermitian within 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::InvalidArgument, "hermitian_eig: eigensolver failed");
  }

  const auto n = m.rows();
  EigResult out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  // Deterministic phase: largest-magnitude component made real-positive.
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      const double a = std::abs(out.vectors(r, k));
      if (a > best) {
        best = a;
        imax = r;
      }
    }
    if (best > 0.0) {
      const Complex phase = out.vectors(imax, k) / best;
      out.vectors.col(k) /= phase;
    }
  }
  return out;
}

CMat psd_sqrt(const CMat& m) {
  EigResult eig = hermitian_eig(m);
  const auto n = m.rows();
  Eigen::VectorXd lam = eig.values;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (lam(k) < -kPsdClamp) {
      throw Error(Errc::NotPsd, "psd_sqrt: eigenvalue below -1e-9");
    }
    if (lam(k) < 0.0) lam(k) = 0.0;
  }
  CMat out = CMat::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out += std::sqrt(lam(k)) * eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  return out;
}

double trace_norm(const CMat& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::InvalidArgument, "trace_norm: matrix must be square");
  }
  // Singular values via the spectrum of m^dag m, clamped at zero.
  Eigen::SelfAdjointEigenSolver<CMat> solver(m.adjoint() * m);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    const double v = solver.eigenvalues()(k);
    sum += std::sqrt(v > 0.0 ? v : 0.0);
  }
  return sum;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

const CMat& pauli(int i) {
  static const CMat mats[4] = {
      [] { CMat m(2, 2); m << 1, 0, 0, 1; return m; }(),
      [] { CMat m(2, 2); m << 0, 1, 1, 0; return m; }(),
      [] { CMat m(2, 2); m << 0, Complex(0, -1), Complex(0, 1), 0; return m; }(),
      [] { CMat m(2, 2); m << 1, 0, 0, -1; return m; }(),
  };
  if (i < 0 || i > 3) throw Error(Errc::InvalidArgument, "pauli: index out of range");
  return mats[i];
}

CMat identity2() { return CMat::Identity(2, 2); }
CMat identity4() { return CMat::Identity(4, 4); }

}  // namespace qchan
