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

// End-to-end verification gate. Each numbered check prints one PASS/FAIL
// line with its measured values; the process exits nonzero if any fail.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "qchan/decomposer.hpp"
#include "qchan/fixtures.hpp"
#include "qchan/geometry.hpp"
#include "qchan/metrics.hpp"
#include "qchan/noise.hpp"
#include "qchan/randomgen.hpp"
#include "qchan/tomography.hpp"
#include "qchan/waveplates.hpp"
#include "qchan/weakmeas.hpp"

using namespace qchan;

namespace {

int g_failures = 0;

void report(int idx, bool ok, const char* what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, what,
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

// 1. Published parameter sets rebuild the five reference channels, and a
//    seeded refit reaches at least the published accuracy.
void criterion1() {
  const auto& chans = fixtures::reference_channels();
  const auto& decs = fixtures::reference_decompositions();
  const auto& errs = fixtures::reference_errors();
  double worst_obj = 0.0, worst_excess = -1.0;
  for (int i = 0; i < 5; ++i) {
    const double obj = objective(decs[i], ChoiMatrix{chans[i]});
    std::printf("  channel %d: objective %.4f, published %.4f\n", i + 1, obj, errs[i]);
    worst_obj = std::max(worst_obj, obj);

    DecomposeConfig cfg;
    cfg.tolerance = 1e-4;
    cfg.max_restarts = 5;
    cfg.seed = 1;
    const DecompositionResult r = decompose(Channel{ChoiMatrix{chans[i]}}, cfg, decs[i]);
    worst_excess = std::max(worst_excess, r.achieved_error - (errs[i] + 0.01));
  }
  report(1, worst_obj <= 0.05 && worst_excess <= 0.0,
         "published decompositions rebuild the reference channels",
         fmt("worst objective %.4f <= 0.05, refit within published error + 0.01",
             worst_obj));
}

// 2. 100 seeded random channels decompose to small error.
void criterion2() {
  std::vector<double> errors;
  DecomposeConfig cfg;
  cfg.tolerance = 1e-3;
  cfg.max_restarts = 20;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cfg.seed = seed;
    errors.push_back(decompose(Channel{random_channel(seed)}, cfg).achieved_error);
  }
  std::sort(errors.begin(), errors.end());
  const double median = (errors[49] + errors[50]) / 2.0;
  const double max = errors.back();
  report(2, median <= 0.005 && max <= 0.03, "random channels decompose to small error",
         fmt("median %.2e <= 5e-3, max %.2e <= 3e-2", median, max));
}

// 3. Noise presets equal the closed-form channels exactly and match the
//    self-consistent published parameter rows.
void criterion3() {
  const NoiseKind kinds[] = {NoiseKind::AmplitudeDamping, NoiseKind::BitFlip,
                             NoiseKind::PhaseFlip, NoiseKind::Depolarizing};
  double worst_exact = 0.0;
  for (NoiseKind k : kinds) {
    for (int i = 0; i <= 100; ++i) {
      const double lam = i / 100.0;
      const CMat truth = to_choi(Channel{make_noise(k, lam)}).j;
      const CMat built = build_mixture(preset_decomposition(k, lam)).j;
      worst_exact = std::max(worst_exact, trace_norm(built - truth) / 2.0);
    }
  }

  const double angle_tol = 1e-2 * 3.14159265358979;
  double worst_print = 0.0;
  for (NoiseKind k : kinds) {
    for (const auto& row : fixtures::printed_noise_rows(k)) {
      if (!row.consistent) continue;
      const Decomposition17 d = preset_decomposition(k, row.lambda);
      const CircuitAngles g = circuit_angles(d.e1.alpha, d.e1.beta);
      worst_print = std::max({worst_print, std::abs(d.e1.alpha - row.alpha1),
                              std::abs(d.e1.beta - row.beta1),
                              std::abs(g.gamma1 - row.gamma1_1),
                              std::abs(g.gamma2 - row.gamma2_1)});
    }
  }
  report(3, worst_exact <= 1e-12 && worst_print <= angle_tol,
         "noise presets rebuild the closed forms and printed rows",
         fmt("worst exact distance %.1e <= 1e-12, worst printed-angle gap %.4f <= %.4f",
             worst_exact, worst_print, angle_tol));
}

// 4. Metric identities substituted for the hardware-only numbers.
void criterion4() {
  const bool avg_ok = std::abs(average_fidelity(0.94) - 0.96) < 1e-15;

  bool bracket_ok = true;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Channel a{random_channel(2 * seed)};
    const Channel b{random_channel(2 * seed + 1)};
    const double d = trace_distance(a, b);
    const auto [lo, hi] = fidelity_distance_bounds(process_fidelity(a, b));
    bracket_ok = bracket_ok && lo <= d + 1e-9 && d <= hi + 1e-9;
  }

  // the published lower bound 0.06 exceeds the formula's 1 - sqrt(0.94)
  const double formula_lo = fidelity_distance_bounds(0.94).first;
  const bool flagged = formula_lo < 0.06 && std::abs(formula_lo - 0.031) < 1e-3;

  report(4, avg_ok && bracket_ok && flagged,
         "fidelity identities and distance bracket on 1000 random pairs",
         fmt("avg fid exact, bracket %s, printed lower bound 0.06 vs formula %.3f",
             bracket_ok ? "holds" : "violated", formula_lo));
}

// 5. Weak-measurement theory curves against an independent oracle.
void criterion5() {
  auto state = [](char which) {
    CMat r(2, 2);
    switch (which) {
      case 'H': r << 1, 0, 0, 0; break;
      case 'V': r << 0, 0, 0, 1; break;
      case 'D': r << 0.5, 0.5, 0.5, 0.5; break;
      default: r << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5; break;
    }
    return r;
  };
  auto oracle = [](const CMat& rho, double lam, double p1, Strategy s) {
    const double p2 = s == Strategy::None ? 0.0
                      : s == Strategy::NonOptimal ? p1
                                                  : p1 + lam * (1.0 - p1);
    CMat m = CMat::Identity(2, 2), n = CMat::Identity(2, 2);
    if (s != Strategy::None) {
      m(1, 1) = std::sqrt(1.0 - p1);
      n(0, 0) = std::sqrt(1.0 - p2);
    }
    CMat k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - lam);
    k1 << 0, std::sqrt(lam), 0, 0;
    const CMat pre = m * rho * m.adjoint();
    const CMat out =
        n * (k0 * pre * k0.adjoint() + k1 * pre * k1.adjoint()) * n.adjoint();
    return (rho * out).trace().real() / out.trace().real();
  };

  WeakMeasConfig cfg;
  cfg.p1 = 0.8;
  double worst = 0.0;
  bool ordered = true, immune = true;
  for (int i = 0; i <= 100; ++i) {
    const double lam = i / 100.0;
    for (char which : {'V', 'D', 'L'}) {
      const CMat rho = state(which);
      double f[3];
      int idx = 0;
      for (Strategy s : {Strategy::None, Strategy::NonOptimal, Strategy::Optimal}) {
        if (s == Strategy::Optimal && lam == 1.0) {
          f[idx++] = 1.0;  // post-selection succeeds with probability zero
          continue;
        }
        cfg.strategy = s;
        const double fid = protect(rho, lam, cfg).fidelity;
        worst = std::max(worst, std::abs(fid - oracle(rho, lam, cfg.p1, s)));
        f[idx++] = fid;
      }
      ordered = ordered && f[2] >= f[1] - 1e-12 && f[1] >= f[0] - 1e-12;
    }
    for (Strategy s : {Strategy::None, Strategy::NonOptimal, Strategy::Optimal}) {
      if (s == Strategy::Optimal && lam == 1.0) continue;
      cfg.strategy = s;
      immune = immune && std::abs(protect(state('H'), lam, cfg).fidelity - 1.0) < 1e-12;
    }
  }
  report(5, worst <= 1e-9 && ordered && immune,
         "protection sweep matches the closed-form oracle",
         fmt("worst oracle gap %.1e <= 1e-9, ordering %s, pole state immune: %s", worst,
             ordered ? "holds" : "violated", immune ? "yes" : "no"));
}

// 6. Tomography: exact round trip, high-shot fidelity, shot scaling.
void criterion6() {
  double worst_exact = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Channel truth{random_channel(seed)};
    const PauliChi rec = simulate_qpt(truth, QptConfig{});
    worst_exact = std::max(
        worst_exact,
        (rec.chi - choi_to_chi(to_choi(truth)).chi).cwiseAbs().maxCoeff());
  }

  // Uhlmann fidelity with the exact channel as the sandwich state. The raw
  // linear-inversion output is kept as-is: clamping happens only inside the
  // matrix square root, so the estimate is not biased by projecting stray
  // shot-noise weight onto the positive cone. Averaged over seeded runs.
  auto choi_fidelity = [](const CMat& truth_j, const CMat& raw_j) {
    const CMat ra = truth_j / truth_j.trace().real();
    const CMat h = (raw_j + raw_j.adjoint()) / 2.0;
    const CMat rb = h / h.trace().real();
    const CMat sa = psd_sqrt(ra);
    const CMat inner = sa * rb * sa;
    const double f = psd_sqrt((inner + inner.adjoint()) / 2.0).trace().real();
    return std::min(1.0, f * f);
  };
  double min_fid = 1.0;
  for (NoiseKind k : {NoiseKind::AmplitudeDamping, NoiseKind::BitFlip,
                      NoiseKind::PhaseFlip, NoiseKind::Depolarizing}) {
    const Channel truth{make_noise(k, 0.5)};
    const CMat truth_j = to_choi(truth).j;
    double fid = 0.0;
    const int reps = 20;
    for (std::uint64_t s = 0; s < reps; ++s) {
      QptConfig cfg;
      cfg.shots = 100000;
      cfg.seed = 7 + s;
      fid += choi_fidelity(truth_j, chi_to_choi(simulate_qpt(truth, cfg)).j);
    }
    min_fid = std::min(min_fid, fid / reps);
  }

  // slope of log error vs log shots, averaged over seeds
  const Channel truth{make_noise(NoiseKind::AmplitudeDamping, 0.5)};
  const CMat truth_chi = choi_to_chi(to_choi(truth)).chi;
  std::vector<long long> shot_grid = {1000, 10000, 100000, 1000000};
  std::vector<double> lx, ly;
  for (long long shots : shot_grid) {
    double err = 0.0;
    const int reps = 20;
    for (std::uint64_t s = 0; s < reps; ++s) {
      QptConfig cfg;
      cfg.shots = shots;
      cfg.seed = 1000 + s;
      err += (simulate_qpt(truth, cfg).chi - truth_chi).norm();
    }
    lx.push_back(std::log10(double(shots)));
    ly.push_back(std::log10(err / reps));
  }
  double mx = 0, my = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  double num = 0, den = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = num / den;

  report(6,
         worst_exact <= 1e-9 && min_fid >= 0.999 && std::abs(slope + 0.5) <= 0.15,
         "tomography round trip, shot fidelity and scaling",
         fmt("exact gap %.1e <= 1e-9, min fidelity %.5f >= 0.999, slope %.3f in "
             "-0.5 +/- 0.15",
             worst_exact, min_fid, slope));
}

// 7. Wave-plate compiler on random rotations plus the exact two-HWP identity.
void criterion7() {
  RngStream rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    Vec3 axis(rng.normal(), rng.normal(), rng.normal());
    axis.normalize();
    const double two_theta = rng.uniform(-2 * 3.14159265358979, 2 * 3.14159265358979);
    const PlateStack s = compile_rotation(axis, two_theta);
    worst = std::max(worst, phase_distance(s.matrix(), rotation(axis, two_theta)));
  }

  double worst_ry = 0.0;
  for (int i = 0; i <= 360; ++i) {
    const double two_gamma = i * 3.14159265358979 / 180.0;
    const PlateStack s = compile_ry(two_gamma);
    worst_ry =
        std::max(worst_ry, phase_distance(s.matrix(), rotation(Vec3(0, 1, 0), two_gamma)));
  }

  report(7, worst <= 1e-9 && worst_ry <= 1e-12,
         "wave-plate compilation of random rotations",
         fmt("worst phase distance %.1e <= 1e-9 over 10^4 rotations, two-HWP gap %.1e",
             worst, worst_ry));
}

// 8. Bloch image clouds for the collapse and identity cases.
void criterion8() {
  double worst = 0.0;
  for (const CloudPoint& p :
       image_cloud(Channel{make_noise(NoiseKind::AmplitudeDamping, 1.0)}, 500)) {
    worst = std::max({worst, std::abs(p.output.x), std::abs(p.output.y),
                      std::abs(p.output.z - 1.0)});
  }
  for (const CloudPoint& p :
       image_cloud(Channel{make_noise(NoiseKind::Depolarizing, 0.75)}, 500)) {
    worst = std::max({worst, std::abs(p.output.x), std::abs(p.output.y),
                      std::abs(p.output.z)});
  }
  for (const CloudPoint& p :
       image_cloud(Channel{KrausChannel{{CMat::Identity(2, 2)}}}, 500)) {
    const double r = std::sqrt(p.output.x * p.output.x + p.output.y * p.output.y +
                               p.output.z * p.output.z);
    worst = std::max(worst, std::abs(r - 1.0));
  }
  report(8, worst <= 1e-9, "channel image geometry",
         fmt("worst deviation %.1e <= 1e-9", worst));
}

// 9. Hardware gate characterization is out of scope by design.
void criterion9() {
  report(9, true, "hardware gate fidelity not reproduced",
         "hardware characterization; explicitly out of scope");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
