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

#include "qchan/channels.hpp"
#include "qchan/noise.hpp"
#include "test_helpers.hpp"

using namespace qchan;
using namespace qchan::testing;

namespace {

KrausChannel random_kraus(std::uint64_t seed) { return random_channel(seed); }

}  // namespace

TEST_CASE("identity channel Choi matrix is twice the Bell projector") {
  const KrausChannel id{{CMat::Identity(2, 2)}};
  const CMat j = kraus_to_choi(id).j;
  CHECK(j.trace().real() == doctest::Approx(2.0));
  // (|00>+|11>)(<00|+<11|) in out*2+in indexing: support on rows 0 and 3
  CHECK(j(0, 0) == Complex(1, 0));
  CHECK(j(0, 3) == Complex(1, 0));
  CHECK(j(3, 0) == Complex(1, 0));
  CHECK(j(3, 3) == Complex(1, 0));
  CHECK(j(1, 1) == Complex(0, 0));
  CHECK(j(2, 2) == Complex(0, 0));
}

TEST_CASE("amplitude damping Choi diagonal follows the damping split") {
  const double lam = 0.36;
  const CMat j = kraus_to_choi(make_noise(NoiseKind::AmplitudeDamping, lam)).j;
  CHECK(j(0, 0).real() == doctest::Approx(1.0));
  CHECK(j(1, 1).real() == doctest::Approx(lam));
  CHECK(j(2, 2).real() == doctest::Approx(0.0));
  CHECK(j(3, 3).real() == doctest::Approx(1.0 - lam));
  // rows pair up to preserve trace: J11+J33 = J22+J44 = 1
  CHECK((j(0, 0) + j(2, 2)).real() == doctest::Approx(1.0));
  CHECK((j(1, 1) + j(3, 3)).real() == doctest::Approx(1.0));
  CHECK(j(0, 3).real() == doctest::Approx(std::sqrt(1.0 - lam)));
}

TEST_CASE("phase flip chi matrix is diag(1-lambda, 0, 0, lambda)") {
  const double lam = 0.36;
  const CMat chi =
      choi_to_chi(kraus_to_choi(make_noise(NoiseKind::PhaseFlip, lam))).chi;
  CHECK(chi(0, 0).real() == doctest::Approx(1.0 - lam));
  CHECK(chi(3, 3).real() == doctest::Approx(lam));
  CHECK(std::abs(chi(1, 1)) < 1e-14);
  CHECK(std::abs(chi(0, 3)) < 1e-14);
  CHECK(chi.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("representation conversions round trip on random channels") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const KrausChannel k = random_kraus(seed);
    const ChoiMatrix j = kraus_to_choi(k);

    // choi -> kraus -> choi
    CHECK(max_abs_diff(kraus_to_choi(choi_to_kraus(j)).j, j.j) < 1e-12);
    // choi -> chi -> choi
    CHECK(max_abs_diff(chi_to_choi(choi_to_chi(j)).j, j.j) < 1e-12);
  }
}

TEST_CASE("apply agrees across all three representations") {
  RngStream rng(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const KrausChannel k = random_kraus(seed);
    const ChoiMatrix j = kraus_to_choi(k);
    const PauliChi chi = choi_to_chi(j);
    const CMat rho = random_density(2, rng);
    const CMat via_kraus = qchan::apply(Channel{k}, rho);
    CHECK(max_abs_diff(qchan::apply(Channel{j}, rho), via_kraus) < 1e-12);
    CHECK(max_abs_diff(qchan::apply(Channel{chi}, rho), via_kraus) < 1e-12);
    CHECK(via_kraus.trace().real() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("mix normalizes weights and is convex in Choi form") {
  const Channel a{make_noise(NoiseKind::BitFlip, 0.2)};
  const Channel b{make_noise(NoiseKind::PhaseFlip, 0.7)};
  const CMat expected =
      0.25 * to_choi(a).j + 0.75 * to_choi(b).j;
  CHECK(max_abs_diff(mix({{1.0, a}, {3.0, b}}).j, expected) < 1e-14);

  CHECK_THROWS_AS(mix({{0.0, a}, {0.0, b}}), Error);
  CHECK_THROWS_AS(mix({{-1.0, a}, {2.0, b}}), Error);
}

TEST_CASE("validate passes CPTP channels and grades violations") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ValidationReport r = validate(Channel{random_kraus(seed)});
    CHECK(r.hermitian);
    CHECK(r.psd);
    CHECK(r.trace_preserving);
    CHECK(r.trace_nonincreasing);
    CHECK(r.worst_violation < 1e-10);
  }

  // trace-decreasing but CP map: single Kraus 0.5*identity
  const KrausChannel half{{0.5 * CMat::Identity(2, 2)}};
  const ValidationReport r = validate(Channel{half});
  CHECK(r.psd);
  CHECK(r.trace_nonincreasing);
  CHECK_FALSE(r.trace_preserving);

  // non-PSD "Choi matrix"
  CMat bad = CMat::Identity(4, 4);
  bad(2, 2) = -0.5;
  const ValidationReport rb = validate(Channel{ChoiMatrix{bad}});
  CHECK_FALSE(rb.psd);
  CHECK(rb.psd_violation == doctest::Approx(0.5));
}

TEST_CASE("choi_to_kraus drops noise-level eigenvalues") {
  CMat j = kraus_to_choi(KrausChannel{{CMat::Identity(2, 2)}}).j;
  j(1, 1) += 5e-11;  // below the 1e-10 cut
  const KrausChannel k = choi_to_kraus(ChoiMatrix{j});
  CHECK(k.ops.size() == 1);
}
