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

#include "qchan/randomgen.hpp"

#include <cmath>
#include <numbers>

namespace qchan {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  // Mix seed and stream id so nearby values give unrelated sequences.
  std::uint64_t s = stream + 0x632be59bd9b4e019ULL;
  const std::uint64_t mixed = splitmix64(s);
  state_ = seed ^ mixed;
  (void)splitmix64(state_);  // burn-in one step
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double RngStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

CMat haar_unitary(int dim, std::uint64_t seed, std::uint64_t stream) {
  if (dim != 2 && dim != 4 && dim != 8) {
    throw Error(Errc::UnsupportedDim, "haar_unitary: dim must be 2, 4 or 8");
  }
  RngStream rng(seed, stream);
  CMat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());

  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is exactly Haar.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0 ? d / a : Complex(1, 0));
  }
  return q;
}

KrausChannel random_channel(std::uint64_t seed) {
  const CMat u = haar_unitary(8, seed);
  // Environment index i selects the 2x2 block of rows; the environment input
  // is fixed at |0>, i.e. the first two columns.
  KrausChannel ch;
  for (int i = 0; i < 4; ++i) {
    CMat k(2, 2);
    for (int sp = 0; sp < 2; ++sp)
      for (int s = 0; s < 2; ++s) k(sp, s) = u(i * 2 + sp, s);
    ch.ops.push_back(k);
  }
  return ch;
}

}  // namespace qchan
