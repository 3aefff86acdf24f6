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

#include <cstdint>

#include "qchan/channels.hpp"

namespace qchan {

/// Counter-based splitmix64 stream. (seed, stream) pairs give independent
/// sequences, so parallel consumers never share state. The output does not
/// depend on the standard library's distribution implementations.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  double normal();                        // standard Gaussian (Box-Muller)

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random unitary via QR of a complex Ginibre matrix with the R-diagonal
/// phase correction. dim in {2, 4, 8}.
CMat haar_unitary(int dim, std::uint64_t seed, std::uint64_t stream = 0);

/// Random CPTP qubit channel: K_i = <i|U|0> on the environment factor of a
/// Haar-random 8x8 unitary (environment (x) system ordering, system trailing).
KrausChannel random_channel(std::uint64_t seed);

}  // namespace qchan
