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

#include <doctest.h>

#include "qchan/metrics.hpp"
#include "qchan/noise.hpp"
#include "qchan/randomgen.hpp"
#include "test_helpers.hpp"

using namespace qchan;
using namespace qchan::testing;

namespace {

Channel identity_channel() { return KrausChannel{{CMat::Identity(2, 2)}}; }

}  // namespace

TEST_CASE("process_fidelity is 1 on identical channels and symmetric") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Channel a{random_channel(seed)};
    const Channel b{random_channel(seed + 50)};
    CHECK(process_fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(process_fidelity(a, b) ==
          doctest::Approx(process_fidelity(b, a)).epsilon(1e-9));
    CHECK(process_fidelity(a, b) >= 0.0);
    CHECK(process_fidelity(a, b) <= 1.0 + 1e-12);
  }
}

TEST_CASE("identity vs phase flip has closed-form fidelity and distance") {
  // Normalized Chois are a pure Bell projector vs its (1-lambda, lambda)
  // mixture with the Z-rotated projector, so F = 1-lambda and D = lambda.
  for (double lam : {0.1, 0.36, 0.5, 0.9}) {
    const Channel pf{make_noise(NoiseKind::PhaseFlip, lam)};
    CHECK(process_fidelity(identity_channel(), pf) ==
          doctest::Approx(1.0 - lam).epsilon(1e-9));
    CHECK(trace_distance(identity_channel(), pf) == doctest::Approx(lam).epsilon(1e-9));
  }
}

TEST_CASE("average_fidelity maps 0.94 to 0.96") {
  CHECK(average_fidelity(0.94) == doctest::Approx(0.96).epsilon(1e-15));
  CHECK(average_fidelity(1.0) == doctest::Approx(1.0));
  CHECK(average_fidelity(0.0) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("fidelity-distance bounds bracket the trace distance") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Channel a{random_channel(2 * seed)};
    const Channel b{random_channel(2 * seed + 1)};
    const double fp = process_fidelity(a, b);
    const double d = trace_distance(a, b);
    const auto [lo, hi] = fidelity_distance_bounds(fp);
    CHECK(lo <= d + 1e-9);
    CHECK(d <= hi + 1e-9);
  }
}

TEST_CASE("published lower bound value disagrees with the formula") {
  // The formula gives 1 - sqrt(0.94) ~ 0.031, not 0.06.
  const auto [lo, hi] = fidelity_distance_bounds(0.94);
  CHECK(lo == doctest::Approx(1.0 - std::sqrt(0.94)).epsilon(1e-12));
  CHECK(lo < 0.06);
  CHECK(hi == doctest::Approx(std::sqrt(0.06)).epsilon(1e-12));
}

TEST_CASE("diamond bounds bracket and dominate the trace distance") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Channel a{random_channel(3 * seed)};
    const Channel b{random_channel(3 * seed + 1)};
    const auto [lo, hi] = diamond_bounds(a, b);
    CHECK(lo <= hi + 1e-12);
    CHECK(lo >= 0.0);
    // half the unnormalized Choi trace-norm difference equals the normalized
    // trace distance doubled, so hi >= D always
    CHECK(hi >= trace_distance(a, b) - 1e-9);
  }
}

TEST_CASE("diamond bounds for identity vs phase flip") {
  const double lam = 0.25;
  const Channel pf{make_noise(NoiseKind::PhaseFlip, lam)};
  const auto [lo, hi] = diamond_bounds(identity_channel(), pf);
  CHECK(hi == doctest::Approx(2 * lam).epsilon(1e-9));
  // equatorial pure states realize output distance lambda; the scan finds it
  CHECK(lo == doctest::Approx(lam).epsilon(1e-3));
}

TEST_CASE("process_fidelity rejects non-trace-preserving input") {
  const Channel half{KrausChannel{{0.5 * CMat::Identity(2, 2)}}};
  CHECK_THROWS_AS(process_fidelity(identity_channel(), half), Error);
}

TEST_CASE("compare_channels is consistent with the individual metrics") {
  const Channel a{random_channel(400)};
  const Channel b{random_channel(401)};
  const MetricReport r = compare_channels(a, b);
  CHECK(r.process_fidelity == doctest::Approx(process_fidelity(a, b)));
  CHECK(r.average_fidelity == doctest::Approx(average_fidelity(r.process_fidelity)));
  CHECK(r.trace_distance == doctest::Approx(trace_distance(a, b)));
  CHECK(r.fid_dist_bounds.first <= r.trace_distance + 1e-9);
  CHECK(r.trace_distance <= r.fid_dist_bounds.second + 1e-9);
  CHECK(r.diamond_bounds.first <= r.diamond_bounds.second);
}
