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

#include "qchan/qchan_c.h"

#include <cstring>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qchan/decomposer.hpp"
#include "qchan/fixtures.hpp"
#include "qchan/geometry.hpp"
#include "qchan/json_io.hpp"
#include "qchan/metrics.hpp"
#include "qchan/noise.hpp"
#include "qchan/randomgen.hpp"
#include "qchan/tomography.hpp"
#include "qchan/waveplates.hpp"
#include "qchan/weakmeas.hpp"

struct qchan_channel {
  qchan::Channel value;
};

namespace {

using nlohmann::json;

thread_local std::string g_last_error = "no error";

qchan_status map_errc(qchan::Errc c) {
  switch (c) {
    case qchan::Errc::ParseError:
      return QCHAN_ERR_PARSE;
    case qchan::Errc::InvalidArgument:
      return QCHAN_ERR_INVALID_ARGUMENT;
    default:
      return QCHAN_ERR_DOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
qchan_status guarded(Fn&& fn) {
  try {
    fn();
    return QCHAN_OK;
  } catch (const qchan::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCHAN_ERR_INTERNAL;
  }
}

qchan_status fail_null(const char* what) {
  g_last_error = std::string(what) + ": null pointer argument";
  return QCHAN_ERR_INVALID_ARGUMENT;
}

qchan::NoiseKind parse_kind(const char* kind) {
  const auto k = qchan::noise_kind_from_string(kind ? kind : "");
  if (!k) throw qchan::Error(qchan::Errc::InvalidArgument, "unknown noise kind");
  return *k;
}

qchan::CMat named_state(const std::string& name) {
  qchan::CMat rho(2, 2);
  if (name == "H") rho << 1, 0, 0, 0;
  else if (name == "V") rho << 0, 0, 0, 1;
  else if (name == "D") rho << 0.5, 0.5, 0.5, 0.5;
  else if (name == "L")
    rho << 0.5, qchan::Complex(0, -0.5), qchan::Complex(0, 0.5), 0.5;
  else throw qchan::Error(qchan::Errc::InvalidArgument, "state must be H, V, D or L");
  return rho;
}

json annotation_row(const qchan::fixtures::PrintedNoiseRow& r) {
  json o{{"lambda", r.lambda},
         {"e1", {{"alpha", r.alpha1}, {"beta", r.beta1}, {"gamma1", r.gamma1_1},
                 {"gamma2", r.gamma2_1}}},
         {"p", r.p},
         {"consistent", r.consistent}};
  if (r.has_e2) {
    o["e2"] = {{"alpha", r.alpha2},
               {"beta", r.beta2},
               {"gamma1", r.gamma1_2},
               {"gamma2", r.gamma2_2},
               {"y_pre_rotation", r.y_pre_rotation_e2}};
  }
  return o;
}

}  // namespace

extern "C" {

const char* qchan_last_error(void) { return g_last_error.c_str(); }

void qchan_string_free(char* s) { std::free(s); }

void qchan_channel_free(qchan_channel* ch) { delete ch; }

qchan_status qchan_channel_from_json(const char* text, qchan_channel** out) {
  if (!text || !out) return fail_null("qchan_channel_from_json");
  return guarded([&] { *out = new qchan_channel{qchan::channel_from_json(text)}; });
}

qchan_status qchan_channel_to_json(const qchan_channel* ch, const char* repr,
                                   char** json_out) {
  if (!ch || !repr || !json_out) return fail_null("qchan_channel_to_json");
  return guarded([&] {
    const std::string want = repr;
    qchan::Channel converted = ch->value;
    if (want == "kraus") {
      converted = qchan::choi_to_kraus(qchan::to_choi(ch->value));
    } else if (want == "choi") {
      converted = qchan::to_choi(ch->value);
    } else if (want == "pauli_chi") {
      converted = qchan::choi_to_chi(qchan::to_choi(ch->value));
    } else {
      throw qchan::Error(qchan::Errc::InvalidArgument, "unknown repr");
    }
    *json_out = dup_string(qchan::channel_to_json(converted));
  });
}

qchan_status qchan_noise_channel(const char* kind, double lambda, qchan_channel** out) {
  if (!out) return fail_null("qchan_noise_channel");
  return guarded([&] {
    *out = new qchan_channel{qchan::make_noise(parse_kind(kind), lambda)};
  });
}

qchan_status qchan_random_channel(uint64_t seed, qchan_channel** out) {
  if (!out) return fail_null("qchan_random_channel");
  return guarded([&] { *out = new qchan_channel{qchan::random_channel(seed)}; });
}

qchan_status qchan_validate(const qchan_channel* ch, char** report_json) {
  if (!ch || !report_json) return fail_null("qchan_validate");
  return guarded([&] {
    const qchan::ValidationReport r = qchan::validate(ch->value);
    json o{{"hermitian", r.hermitian},
           {"psd", r.psd},
           {"trace_preserving", r.trace_preserving},
           {"trace_nonincreasing", r.trace_nonincreasing},
           {"hermitian_violation", r.hermitian_violation},
           {"psd_violation", r.psd_violation},
           {"trace_preserving_violation", r.trace_preserving_violation},
           {"trace_nonincreasing_violation", r.trace_nonincreasing_violation},
           {"worst_violation", r.worst_violation}};
    *report_json = dup_string(o.dump(2));
  });
}

qchan_status qchan_decompose(const qchan_channel* target, double tolerance,
                             int max_restarts, int max_iterations, uint64_t seed,
                             const char* init_json, char** result_json) {
  if (!target || !result_json) return fail_null("qchan_decompose");
  return guarded([&] {
    qchan::DecomposeConfig cfg;
    cfg.tolerance = tolerance;
    cfg.max_restarts = max_restarts;
    cfg.max_iterations = max_iterations;
    cfg.seed = seed;
    std::optional<qchan::Decomposition17> init;
    if (init_json) init = qchan::decomposition_from_json(init_json);
    const qchan::DecompositionResult r = qchan::decompose(target->value, cfg, init);
    *result_json = dup_string(qchan::result_to_json(r));
  });
}

qchan_status qchan_objective(const char* decomposition_json, const qchan_channel* target,
                             double* value_out) {
  if (!decomposition_json || !target || !value_out) return fail_null("qchan_objective");
  return guarded([&] {
    const qchan::Decomposition17 d = qchan::decomposition_from_json(decomposition_json);
    *value_out = qchan::objective(d, qchan::to_choi(target->value));
  });
}

qchan_status qchan_build_mixture(const char* decomposition_json, qchan_channel** out) {
  if (!decomposition_json || !out) return fail_null("qchan_build_mixture");
  return guarded([&] {
    const qchan::Decomposition17 d = qchan::decomposition_from_json(decomposition_json);
    *out = new qchan_channel{qchan::build_mixture(d)};
  });
}

qchan_status qchan_preset_decomposition(const char* kind, double lambda,
                                        char** decomposition_json) {
  if (!decomposition_json) return fail_null("qchan_preset_decomposition");
  return guarded([&] {
    const qchan::Decomposition17 d =
        qchan::preset_decomposition(parse_kind(kind), lambda);
    *decomposition_json = dup_string(qchan::decomposition_to_json(d));
  });
}

qchan_status qchan_preset_annotations(const char* kind, char** json_out) {
  if (!json_out) return fail_null("qchan_preset_annotations");
  return guarded([&] {
    json rows = json::array();
    for (const auto& r : qchan::fixtures::printed_noise_rows(parse_kind(kind))) {
      rows.push_back(annotation_row(r));
    }
    *json_out = dup_string(rows.dump(2));
  });
}

qchan_status qchan_compare(const qchan_channel* a, const qchan_channel* b,
                           char** report_json) {
  if (!a || !b || !report_json) return fail_null("qchan_compare");
  return guarded([&] {
    const qchan::MetricReport r = qchan::compare_channels(a->value, b->value);
    *report_json = dup_string(qchan::metric_report_to_json(r));
  });
}

qchan_status qchan_qpt(const qchan_channel* ch, long long shots, uint64_t seed,
                       char** chi_json) {
  if (!ch || !chi_json) return fail_null("qchan_qpt");
  return guarded([&] {
    qchan::QptConfig cfg;
    cfg.shots = shots;
    cfg.seed = seed;
    const qchan::PauliChi chi = qchan::simulate_qpt(ch->value, cfg);
    *chi_json = dup_string(qchan::channel_to_json(chi));
  });
}

qchan_status qchan_weakmeas_sweep(const char* state, double p1, const double* lambdas,
                                  size_t n_lambdas, char** csv_out) {
  if (!state || !lambdas || !csv_out) return fail_null("qchan_weakmeas_sweep");
  return guarded([&] {
    const qchan::CMat rho = named_state(state);
    std::ostringstream os;
    os.precision(17);
    os << "lambda,fidelity_none,fidelity_nonopt,fidelity_opt,"
          "succ_none,succ_nonopt,succ_opt\n";
    // A cell whose post-selection succeeds with probability zero has no
    // fidelity; report it as nan rather than aborting the whole sweep.
    auto cell = [&](double lam, qchan::Strategy s) {
      qchan::WeakMeasConfig cfg;
      cfg.p1 = p1;
      cfg.strategy = s;
      try {
        return qchan::protect(rho, lam, cfg);
      } catch (const qchan::Error& e) {
        if (e.code() != qchan::Errc::ZeroSuccessProbability) throw;
        qchan::ProtectionPoint pt;
        pt.lambda = lam;
        pt.fidelity = std::numeric_limits<double>::quiet_NaN();
        pt.success_probability = 0.0;
        return pt;
      }
    };
    for (size_t i = 0; i < n_lambdas; ++i) {
      const double lam = lambdas[i];
      const auto none = cell(lam, qchan::Strategy::None);
      const auto nonopt = cell(lam, qchan::Strategy::NonOptimal);
      const auto opt = cell(lam, qchan::Strategy::Optimal);
      os << lam << ',' << none.fidelity << ',' << nonopt.fidelity << ','
         << opt.fidelity << ',' << none.success_probability << ','
         << nonopt.success_probability << ',' << opt.success_probability << '\n';
    }
    *csv_out = dup_string(os.str());
  });
}

qchan_status qchan_bloch_cloud(const qchan_channel* ch, int n_samples, char** csv_out) {
  if (!ch || !csv_out) return fail_null("qchan_bloch_cloud");
  return guarded([&] {
    const auto cloud = qchan::image_cloud(ch->value, n_samples);
    std::ostringstream os;
    os.precision(17);
    // Convention: |H> at +z, |D> at +x, |L> at +y.
    os << "index,x_in,y_in,z_in,x_out,y_out,z_out\n";
    for (size_t i = 0; i < cloud.size(); ++i) {
      const auto& p = cloud[i];
      os << i << ',' << p.input.x << ',' << p.input.y << ',' << p.input.z << ','
         << p.output.x << ',' << p.output.y << ',' << p.output.z << '\n';
    }
    *csv_out = dup_string(os.str());
  });
}

qchan_status qchan_compile_rotation(double axis_x, double axis_y, double axis_z,
                                    double two_theta, char** stack_json) {
  if (!stack_json) return fail_null("qchan_compile_rotation");
  return guarded([&] {
    const qchan::PlateStack s =
        qchan::compile_rotation(qchan::Vec3(axis_x, axis_y, axis_z), two_theta);
    *stack_json = dup_string(qchan::plate_stack_to_json(s));
  });
}

qchan_status qchan_compile_decomposition(const char* decomposition_json,
                                         char** json_out) {
  if (!decomposition_json || !json_out) return fail_null("qchan_compile_decomposition");
  return guarded([&] {
    const qchan::Decomposition17 d = qchan::decomposition_from_json(decomposition_json);
    auto compile_extreme = [](const qchan::ExtremeParams& e) {
      const qchan::CircuitAngles angles = qchan::circuit_angles(e.alpha, e.beta);
      json o;
      o["pre_rotation"] =
          json::parse(qchan::plate_stack_to_json(qchan::compile_rotation(e.m_axis, 2 * e.delta)));
      o["post_rotation"] =
          json::parse(qchan::plate_stack_to_json(qchan::compile_rotation(e.n_axis, 2 * e.varphi)));
      o["gamma1"] = angles.gamma1;
      o["gamma2"] = angles.gamma2;
      o["ry_gamma1"] = json::parse(qchan::plate_stack_to_json(qchan::compile_ry(2 * angles.gamma1)));
      o["ry_gamma2"] = json::parse(qchan::plate_stack_to_json(qchan::compile_ry(2 * angles.gamma2)));
      return o;
    };
    json out{{"e1", compile_extreme(d.e1)}, {"e2", compile_extreme(d.e2)}, {"p", d.p}};
    *json_out = dup_string(out.dump(2));
  });
}

qchan_status qchan_fixture(const char* name, char** json_out) {
  if (!name || !json_out) return fail_null("qchan_fixture");
  return guarded([&] {
    const std::string n = name;
    using namespace qchan::fixtures;
    if (n.size() == 2 && n[0] == 'c' && n[1] >= '1' && n[1] <= '5') {
      const qchan::ChoiMatrix j{reference_channels()[n[1] - '1']};
      *json_out = dup_string(qchan::channel_to_json(j));
    } else if (n == "arbitrary") {
      *json_out = dup_string(qchan::channel_to_json(qchan::PauliChi{arbitrary_chi()}));
    } else if (n == "table1") {
      json rows = json::array();
      for (int i = 0; i < 5; ++i) {
        rows.push_back(
            json{{"channel", "c" + std::to_string(i + 1)},
                 {"decomposition",
                  json::parse(qchan::decomposition_to_json(reference_decompositions()[i]))},
                 {"error", reference_errors()[i]}});
      }
      *json_out = dup_string(rows.dump(2));
    } else if (n == "table2") {
      *json_out = dup_string(qchan::decomposition_to_json(arbitrary_decomposition()));
    } else {
      throw qchan::Error(qchan::Errc::InvalidArgument, "unknown fixture '" + n + "'");
    }
  });
}

}  // extern "C"
