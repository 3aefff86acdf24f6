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

#include <Eigen/Dense>
#include <complex>

#include "qchan/error.hpp"

namespace qchan {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

// Fixed tolerances; double precision with <=4x4 matrices leaves large headroom.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdClamp = 1e-9;

struct EigResult {
  Eigen::VectorXd values;  // descending
  CMat vectors;            // unit columns, largest-magnitude component real-positive
};

/// Eigendecomposition of a Hermitian matrix with deterministic ordering and
/// eigenvector phase. Throws Error(NonHermitian) if max |m - m^dag| > kHermTol.
EigResult hermitian_eig(const CMat& m);

/// Hermitian PSD square root. Eigenvalues in [-kPsdClamp, 0) are clamped to 0;
/// anything below throws Error(NotPsd).
CMat psd_sqrt(const CMat& m);

/// Sum of singular values (Schatten-1 norm).
double trace_norm(const CMat& m);

/// Kronecker (tensor) product, left factor major.
CMat kron(const CMat& a, const CMat& b);

/// Pauli basis Xi = (1, X, Y, Z), index 0..3.
const CMat& pauli(int i);

CMat identity2();
CMat identity4();

}  // namespace qchan
