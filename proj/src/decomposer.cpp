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

#include "qchan/decomposer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "qchan/randomgen.hpp"

namespace qchan {

namespace {

using std::numbers::pi;

constexpr int kDim = 17;
using ParamVec = std::array<double, kDim>;

// Unconstrained coordinates: 8 angles per extreme channel (alpha, beta, delta,
// varphi and spherical axis angles for m and n), plus a logistic coordinate
// for p. Avoids the unit-axis and [0,1] constraints inside the optimizer.
Vec3 axis_from_spherical(double th, double ph) {
  return Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
}

void pack_extreme(const ExtremeParams& e, double* x) {
  x[0] = e.alpha;
  x[1] = e.beta;
  x[2] = e.delta;
  x[3] = e.varphi;
  x[4] = std::acos(std::clamp(e.m_axis(2), -1.0, 1.0));
  x[5] = std::atan2(e.m_axis(1), e.m_axis(0));
  x[6] = std::acos(std::clamp(e.n_axis(2), -1.0, 1.0));
  x[7] = std::atan2(e.n_axis(1), e.n_axis(0));
}

ExtremeParams unpack_extreme(const double* x) {
  ExtremeParams e;
  e.alpha = x[0];
  e.beta = x[1];
  e.delta = x[2];
  e.varphi = x[3];
  e.m_axis = axis_from_spherical(x[4], x[5]);
  e.n_axis = axis_from_spherical(x[6], x[7]);
  return e;
}

ParamVec pack(const Decomposition17& d) {
  ParamVec x{};
  pack_extreme(d.e1, x.data());
  pack_extreme(d.e2, x.data() + 8);
  const double p = std::clamp(d.p, 1e-9, 1.0 - 1e-9);
  x[16] = std::log(p / (1.0 - p));
  return x;
}

Decomposition17 unpack(const ParamVec& x) {
  Decomposition17 d;
  d.e1 = unpack_extreme(x.data());
  d.e2 = unpack_extreme(x.data() + 8);
  d.p = 1.0 / (1.0 + std::exp(-x[16]));
  return d;
}

struct NmResult {
  ParamVec x;
  double f = 0.0;
  long evals = 0;
};

// Nelder-Mead with the adaptive coefficients of Gao & Han, suited to
// moderate dimension. Terminates when the simplex value spread drops below
// `spread_tol` or the iteration budget runs out.
NmResult nelder_mead(const std::function<double(const ParamVec&)>& f, const ParamVec& x0,
                     double step, double spread_tol, int max_iter) {
  const int n = kDim;
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / n;
  const double gamma = 0.75 - 1.0 / (2.0 * n);
  const double delta = 1.0 - 1.0 / n;

  long evals = 0;
  auto eval = [&](const ParamVec& x) {
    ++evals;
    return f(x);
  };

  std::vector<ParamVec> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 1; i <= n; ++i) xs[i][i - 1] += step;
  for (int i = 0; i <= n; ++i) fs[i] = eval(xs[i]);

  std::vector<int> order(n + 1);
  for (int it = 0; it < max_iter; ++it) {
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];
    if (fs[worst] - fs[best] < spread_tol) break;

    ParamVec centroid{};
    for (int i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (int k = 0; k < n; ++k) centroid[k] += xs[i][k];
    }
    for (int k = 0; k < n; ++k) centroid[k] /= n;

    auto blend = [&](double c) {
      ParamVec x;
      for (int k = 0; k < n; ++k) x[k] = centroid[k] + c * (centroid[k] - xs[worst][k]);
      return x;
    };

    const ParamVec xr = blend(alpha);
    const double fr = eval(xr);
    if (fr < fs[order[0]]) {
      const ParamVec xe = blend(alpha * beta);
      const double fe = eval(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      const ParamVec xc = blend(outside ? alpha * gamma : -gamma);
      const double fc = eval(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (int k = 0; k < n; ++k) xs[i][k] = xs[best][k] + delta * (xs[i][k] - xs[best][k]);
          fs[i] = eval(xs[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (fs[i] < fs[best]) best = i;
  }
  return NmResult{xs[best], fs[best], evals};
}

}  // namespace

double objective(const Decomposition17& d, const ChoiMatrix& target) {
  const CMat jt = target.j / target.j.trace().real();
  const CMat j = build_mixture(d).j / 2.0;  // mixture of TP extremes has trace 2
  return trace_norm(j - jt) / 2.0;
}

DecompositionResult decompose(const Channel& target, const DecomposeConfig& cfg,
                              const std::optional<Decomposition17>& init) {
  if (cfg.tolerance <= 0.0 || cfg.max_restarts < 1 || cfg.max_iterations < 1) {
    throw Error(Errc::InvalidArgument, "decompose: bad config");
  }
  {
    const ValidationReport v = validate(target);
    if (v.psd_violation > 1e-6 || v.trace_preserving_violation > 1e-6) {
      throw Error(Errc::InvalidChannel, "decompose: target not CPTP within 1e-6");
    }
  }
  const CMat jt_raw = to_choi(target).j;
  const ChoiMatrix jt{jt_raw};

  long total_evals = 0;
  auto obj = [&](const ParamVec& x) { return objective(unpack(x), jt); };

  DecompositionResult best;
  best.achieved_error = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < cfg.max_restarts; ++restart) {
    ParamVec x0;
    if (restart == 0) {
      x0 = pack(init.value_or(Decomposition17{}));
    } else {
      RngStream rng(cfg.seed, static_cast<std::uint64_t>(restart));
      for (int k = 0; k < 8; ++k) x0[k] = rng.uniform(0.0, 2.0 * pi);
      for (int k = 8; k < 16; ++k) x0[k] = rng.uniform(0.0, 2.0 * pi);
      // axes uniform on the sphere
      x0[4] = std::acos(1.0 - 2.0 * rng.uniform());
      x0[6] = std::acos(1.0 - 2.0 * rng.uniform());
      x0[12] = std::acos(1.0 - 2.0 * rng.uniform());
      x0[14] = std::acos(1.0 - 2.0 * rng.uniform());
      const double p = std::clamp(rng.uniform(), 1e-6, 1.0 - 1e-6);
      x0[16] = std::log(p / (1.0 - p));
    }

    // Polish in stages with shrinking simplex steps; each stage restarts the
    // simplex at the previous stage's optimum.
    ParamVec x = x0;
    double fx = std::numeric_limits<double>::infinity();
    for (double step : {0.5, 0.1, 0.02}) {
      NmResult r = nelder_mead(obj, x, step, cfg.tolerance / 10.0, cfg.max_iterations);
      total_evals += r.evals;
      if (r.f < fx) {
        fx = r.f;
        x = r.x;
      }
      if (fx <= cfg.tolerance) break;
    }

    if (fx < best.achieved_error) {
      best.params = unpack(x);
      best.achieved_error = fx;
      best.restart_index = restart;
    }
    if (best.achieved_error <= cfg.tolerance) break;
  }

  best.objective_evals = total_evals;
  best.converged = best.achieved_error <= cfg.tolerance;
  return best;
}

}  // namespace qchan
