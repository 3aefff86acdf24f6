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

#include "qchan/randomgen.hpp"
#include "test_helpers.hpp"

using namespace qchan;
using namespace qchan::testing;

TEST_CASE("RngStream is deterministic and stream-separated") {
  RngStream a(123, 0), b(123, 0), c(123, 1);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  bool differs = false;
  RngStream a2(123, 0);
  for (int i = 0; i < 100; ++i) differs |= (a2.next_u64() != c.next_u64());
  CHECK(differs);
}

TEST_CASE("uniform stays in range and normal has sane moments") {
  RngStream rng(77);
  double sum = 0.0, sum2 = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double g = rng.normal();
    sum += g;
    sum2 += g * g;
  }
  CHECK(sum / n == doctest::Approx(0.0).epsilon(0.05));
  CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("haar_unitary is unitary for all supported dims") {
  for (int dim : {2, 4, 8}) {
    const CMat u = haar_unitary(dim, 5);
    CHECK(max_abs_diff(u * u.adjoint(), CMat::Identity(dim, dim)) < 1e-12);
    CHECK(max_abs_diff(haar_unitary(dim, 5), u) == 0.0);  // deterministic
  }
  CHECK_THROWS_AS(haar_unitary(3, 5), Error);
}

TEST_CASE("haar_unitary entry statistics match the invariant measure") {
  // E|U(0,0)|^2 = 1/dim for Haar; sample mean over many seeds.
  const int n = 600;
  double acc = 0.0;
  for (int s = 0; s < n; ++s) acc += std::norm(haar_unitary(4, 1000 + s)(0, 0));
  CHECK(acc / n == doctest::Approx(0.25).epsilon(0.15));
}

TEST_CASE("random_channel yields four Kraus operators forming a CPTP map") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    const KrausChannel k = random_channel(seed);
    REQUIRE(k.ops.size() == 4);
    CMat acc = CMat::Zero(2, 2);
    for (const CMat& op : k.ops) acc += op.adjoint() * op;
    CHECK(max_abs_diff(acc, CMat::Identity(2, 2)) < 1e-12);
  }
}

TEST_CASE("random_channel distinct seeds give distinct channels") {
  const CMat a = kraus_to_choi(random_channel(1)).j;
  const CMat b = kraus_to_choi(random_channel(2)).j;
  CHECK(max_abs_diff(a, b) > 1e-3);
}
