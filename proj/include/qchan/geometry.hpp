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

#include <vector>

#include "qchan/channels.hpp"

namespace qchan {

// Convention: |H> sits at +z, |D> at +x, |L> at +y; rho = (1 + v.sigma)/2.
struct BlochPoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

BlochPoint bloch_vector(const CMat& rho);

CMat state_from_bloch(const BlochPoint& v);

struct CloudPoint {
  BlochPoint input;
  BlochPoint output;
};

/// Map a Fibonacci-sphere grid of n pure states through the channel.
std::vector<CloudPoint> image_cloud(const Channel& ch, int n_samples);

}  // namespace qchan
