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

#include "qchan/json_io.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace qchan {

namespace {

using nlohmann::json;

json matrix_to_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

CMat matrix_from_json(const json& rows, Eigen::Index dim) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
    throw Error(Errc::ParseError, "matrix: wrong row count");
  }
  CMat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw Error(Errc::ParseError, "matrix: wrong column count");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2) {
        throw Error(Errc::ParseError, "matrix: entries must be [re, im]");
      }
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        throw Error(Errc::ParseError, "matrix: non-finite entry");
      }
    }
  }
  return m;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON");
  return j;
}

json extreme_to_json(const ExtremeParams& e) {
  return json{{"alpha", e.alpha},      {"beta", e.beta},     {"delta", e.delta},
              {"varphi", e.varphi},    {"m1", e.m_axis(0)},  {"m2", e.m_axis(1)},
              {"m3", e.m_axis(2)},     {"n1", e.n_axis(0)},  {"n2", e.n_axis(1)},
              {"n3", e.n_axis(2)}};
}

Vec3 axis_from_json(const json& o, const char* k1, const char* k2, const char* k3) {
  const double a1 = o.at(k1).get<double>();
  const double a2 = o.at(k2).get<double>();
  double a3;
  if (o.contains(k3)) {
    a3 = o.at(k3).get<double>();
  } else {
    a3 = std::sqrt(std::max(0.0, 1.0 - a1 * a1 - a2 * a2));  // + branch
  }
  Vec3 v(a1, a2, a3);
  const double n = v.norm();
  if (n <= 0.0) throw Error(Errc::ParseError, "axis: zero vector");
  return v / n;
}

ExtremeParams extreme_from_json(const json& o) {
  ExtremeParams e;
  e.alpha = o.at("alpha").get<double>();
  e.beta = o.at("beta").get<double>();
  e.delta = o.at("delta").get<double>();
  e.varphi = o.at("varphi").get<double>();
  e.m_axis = axis_from_json(o, "m1", "m2", "m3");
  e.n_axis = axis_from_json(o, "n1", "n2", "n3");
  return e;
}

}  // namespace

std::string channel_to_json(const Channel& ch, int indent) {
  json out;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, KrausChannel>) {
          out["repr"] = "kraus";
          json ops = json::array();
          for (const CMat& op : c.ops) ops.push_back(matrix_to_json(op));
          out["data"] = ops;
        } else if constexpr (std::is_same_v<T, ChoiMatrix>) {
          out["repr"] = "choi";
          out["data"] = matrix_to_json(c.j);
        } else {
          out["repr"] = "pauli_chi";
          out["data"] = matrix_to_json(c.chi);
        }
      },
      ch);
  return out.dump(indent);
}

Channel channel_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("repr") || !j.contains("data")) {
    throw Error(Errc::ParseError, "channel: missing repr or data");
  }
  const std::string repr = j["repr"].get<std::string>();
  if (repr == "kraus") {
    const json& ops = j["data"];
    if (!ops.is_array() || ops.empty() || ops.size() > 4) {
      throw Error(Errc::ParseError, "channel: kraus data must hold 1-4 operators");
    }
    KrausChannel k;
    for (const json& op : ops) k.ops.push_back(matrix_from_json(op, 2));
    return k;
  }
  if (repr == "choi") return ChoiMatrix{matrix_from_json(j["data"], 4)};
  if (repr == "pauli_chi") return PauliChi{matrix_from_json(j["data"], 4)};
  throw Error(Errc::ParseError, "channel: unknown repr '" + repr + "'");
}

std::string decomposition_to_json(const Decomposition17& d, int indent) {
  json out{{"e1", extreme_to_json(d.e1)}, {"e2", extreme_to_json(d.e2)}, {"p", d.p}};
  return out.dump(indent);
}

Decomposition17 decomposition_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    Decomposition17 d;
    d.e1 = extreme_from_json(j.at("e1"));
    d.e2 = extreme_from_json(j.at("e2"));
    d.p = j.at("p").get<double>();
    if (!(d.p >= 0.0 && d.p <= 1.0)) {
      throw Error(Errc::ParseError, "decomposition: p out of [0,1]");
    }
    return d;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("decomposition: ") + e.what());
  }
}

std::string result_to_json(const DecompositionResult& r, int indent) {
  json out{{"e1", extreme_to_json(r.params.e1)},
           {"e2", extreme_to_json(r.params.e2)},
           {"p", r.params.p},
           {"achieved_error", r.achieved_error},
           {"objective_evals", r.objective_evals},
           {"restart_index", r.restart_index},
           {"converged", r.converged}};
  return out.dump(indent);
}

std::string metric_report_to_json(const MetricReport& r, int indent) {
  json out{{"process_fidelity", r.process_fidelity},
           {"average_fidelity", r.average_fidelity},
           {"trace_distance", r.trace_distance},
           {"fid_dist_lower", r.fid_dist_bounds.first},
           {"fid_dist_upper", r.fid_dist_bounds.second},
           {"diamond_lower", r.diamond_bounds.first},
           {"diamond_upper", r.diamond_bounds.second}};
  return out.dump(indent);
}

std::string plate_stack_to_json(const PlateStack& s, int indent) {
  json plates = json::array();
  for (const PlateSetting& p : s.plates) {
    plates.push_back(json{{"kind", p.kind == PlateKind::HWP ? "HWP" : "QWP"},
                          {"angle_rad", p.fast_axis_angle},
                          {"angle_deg", std::round(p.fast_axis_angle * 180.0 /
                                                   std::numbers::pi * 100.0) /
                                            100.0}});
  }
  return json{{"plates", plates}}.dump(indent);
}

}  // namespace qchan
