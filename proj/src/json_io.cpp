// Copyright 2026 The ashn Authors
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

#include "ashn/json_io.hpp"

#include <cmath>

namespace ashn::json_io {

namespace {

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
    throw DomainError(std::string("json: expected numeric field '") + key +
                      "'");
  return j.at(key).get<double>();
}

Json complex_list(const std::vector<Complex>& v) {
  Json arr = Json::array();
  for (const Complex& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

Json phases_json(const std::array<double, 4>& p) {
  return Json::array({p[0], p[1], p[2], p[3]});
}

}  // namespace

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      data.push_back({m(r, c).real(), m(r, c).imag()});
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw DomainError("matrix json: need rows, cols and data");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw DomainError("matrix json: rows and cols must be integers");
  const auto rows = j["rows"].get<long long>();
  const auto cols = j["cols"].get<long long>();
  if (rows <= 0 || cols <= 0 || rows > 64 || cols > 64)
    throw DomainError("matrix json: rows and cols must be in [1, 64]");
  const Json& data = j["data"];
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols)
    throw DomainError("matrix json: data must hold rows*cols entries");
  Eigen::MatrixXcd m(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    const Json& e = data[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw DomainError("matrix json: entries must be [re, im]");
    m(k / cols, k % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

Unitary2 unitary2_from_json(const Json& j) {
  const auto m = matrix_from_json(j);
  if (m.rows() != 2 || m.cols() != 2)
    throw DomainError("matrix json: expected a 2x2 matrix");
  return Unitary2(Matrix2(m));
}

Unitary4 unitary4_from_json(const Json& j) {
  const auto m = matrix_from_json(j);
  if (m.rows() != 4 || m.cols() != 4)
    throw DomainError("matrix json: expected a 4x4 matrix");
  return Unitary4(Matrix4(m));
}

Json to_json(const WeylPoint& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}};
}

WeylPoint point_from_json(const Json& j) {
  return {number(j, "a"), number(j, "b"), number(j, "c")};
}

Json to_json(const KakFactors& k) {
  return Json{{"point", to_json(k.point)},
              {"phase", {k.phase.real(), k.phase.imag()}},
              {"k1", matrix_to_json(k.k1.matrix())},
              {"k2", matrix_to_json(k.k2.matrix())},
              {"k3", matrix_to_json(k.k3.matrix())},
              {"k4", matrix_to_json(k.k4.matrix())}};
}

Json to_json(const NormalizedControls& c) {
  Json j{{"tau", c.tau},         {"omega1", c.omega1},
         {"omega2", c.omega2},   {"delta", c.delta},
         {"variant", to_string(c.variant)}, {"mirrored", c.mirrored}};
  if (c.ea_root)
    j["ea_root"] = {c.ea_root->first, c.ea_root->second};
  if (c.advisory) {
    Json a{{"max_amplitude", c.advisory->max_amplitude},
           {"cap", c.advisory->cap}};
    a["recommended_r"] = c.advisory->recommended_r
                             ? Json(*c.advisory->recommended_r)
                             : Json(nullptr);
    j["advisory"] = a;
  }
  return j;
}

NormalizedControls controls_from_json(const Json& j) {
  NormalizedControls c;
  c.tau = number(j, "tau");
  c.omega1 = number(j, "omega1");
  c.omega2 = number(j, "omega2");
  c.delta = number(j, "delta");
  if (j.contains("mirrored") && j["mirrored"].is_boolean())
    c.mirrored = j["mirrored"].get<bool>();
  if (j.contains("variant") && j["variant"].is_string()) {
    const std::string v = j["variant"].get<std::string>();
    bool found = false;
    for (Variant cand : {Variant::ND, Variant::ND_EXT, Variant::EA_PLUS,
                         Variant::EA_MINUS})
      if (to_string(cand) == v) {
        c.variant = cand;
        found = true;
      }
    if (!found) throw DomainError("controls json: unknown variant '" + v + "'");
  }
  if (!(c.tau > 0)) throw DomainError("controls json: tau must be > 0");
  return c;
}

Json to_json(const PhysicalControls& c) {
  return Json{{"g_mhz", c.g_mhz},         {"t_ns", c.t_ns},
              {"omega1_mhz", c.omega1_mhz}, {"omega2_mhz", c.omega2_mhz},
              {"phi1", c.phi1},           {"phi2", c.phi2},
              {"delta_mhz", c.delta_mhz}};
}

Json to_json(const LocalAlignment& a) {
  return Json{{"l1", matrix_to_json(a.l1.matrix())},
              {"l2", matrix_to_json(a.l2.matrix())},
              {"r1", matrix_to_json(a.r1.matrix())},
              {"r2", matrix_to_json(a.r2.matrix())},
              {"phase", {a.phase.real(), a.phase.imag()}},
              {"residual", a.residual}};
}

Json to_json(const VerificationReport& r) {
  Json j{{"target", to_json(r.target)},
         {"achieved", to_json(r.achieved)},
         {"distance", r.distance},
         {"passed", r.passed}};
  j["reconstruction_residual"] = std::isfinite(r.reconstruction_residual)
                                     ? Json(r.reconstruction_residual)
                                     : Json(nullptr);
  if (r.compensators) j["compensators"] = to_json(*r.compensators);
  return j;
}

Json to_json(const BGateProgram& p) {
  return Json{{"b_count", p.b_count},
              {"beta1", p.mid.beta1},
              {"beta2", p.mid.beta2},
              {"s1_angle", p.mid.s1_angle},
              {"limit_branch", p.mid.limit_branch},
              {"residual", p.residual},
              {"phase", {p.phase.real(), p.phase.imag()}},
              {"k1", matrix_to_json(p.k1.matrix())},
              {"k2", matrix_to_json(p.k2.matrix())},
              {"s1", matrix_to_json(p.s1.matrix())},
              {"s2", matrix_to_json(p.s2.matrix())},
              {"k3", matrix_to_json(p.k3.matrix())},
              {"k4", matrix_to_json(p.k4.matrix())}};
}

Json to_json(const SweepEntry& e) {
  Json j{{"point", to_json(e.point)}, {"ok", e.ok},
         {"b_count", e.b_count},      {"beta1", e.mid.beta1},
         {"beta2", e.mid.beta2},      {"residual", e.residual}};
  if (!e.error.empty()) j["error"] = e.error;
  return j;
}

Json to_json(const Pmw4Sequence& s) {
  return Json{{"phases", phases_json(s.phases)},
              {"alpha", s.angles.alpha},
              {"beta", s.angles.beta},
              {"gamma", s.angles.gamma}};
}

Json to_json(const SampledWaveform& w) {
  return Json{{"rate", w.sample_rate},
              {"duration_ns", w.duration_ns},
              {"samples", complex_list(w.samples)}};
}

Json to_json(const GateSchedule& s) {
  Json j{{"t_ns", s.t_ns},
         {"xy1", to_json(s.xy1)},
         {"xy2", to_json(s.xy2)},
         {"z1", to_json(s.z1)},
         {"zc", to_json(s.zc)},
         {"z2", to_json(s.z2)}};
  Json pm = Json::object();
  for (int q = 0; q < 2; ++q)
    pm["q" + std::to_string(q + 1)] = {
        {"pre", phases_json(s.prologue[q].phases)},
        {"post", phases_json(s.epilogue[q].phases)}};
  j["pmw4"] = pm;
  return j;
}

Json to_json(const XebResult& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.depths.size(); ++i)
    rows.push_back({{"depth", r.depths[i]},
                    {"fidelity", r.per_depth_fidelity[i]}});
  return Json{{"per_depth", rows},
              {"fitted_amplitude", r.fitted_amplitude},
              {"fitted_decay", r.fitted_decay},
              {"fitted_error_per_cycle", r.fitted_error_per_cycle},
              {"two_qubit_error", r.two_qubit_error},
              {"fit_residual", r.fit_residual},
              {"fit_ok", r.fit_ok},
              {"fit_message", r.fit_message}};
}

Json to_json(const ErrorMapResult& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"point", to_json(e.point)},
                       {"b_count", e.b_count},
                       {"mean_error", e.mean_error},
                       {"std_error", e.std_error}});
  const auto& c = r.contrast;
  return Json{{"shots", r.shots},
              {"line_points", c.line_points},
              {"line_mean", c.line_mean},
              {"chamber_mean", c.chamber_mean},
              {"difference", c.difference},
              {"difference_std_error", c.difference_std_error},
              {"significance", std::isfinite(c.significance)
                                   ? Json(c.significance)
                                   : Json(nullptr)},
              {"entries", entries}};
}

Json to_json(const CircuitSpec& c) {
  Json ops = Json::array();
  for (const auto& op : c.ops)
    ops.push_back({{"label", op.label},
                   {"targets", op.targets},
                   {"matrix", matrix_to_json(op.matrix)}});
  return Json{{"n_qubits", c.n_qubits},
              {"two_qubit_gates", c.two_qubit_count()},
              {"ops", ops}};
}

Json to_json(const Statevector& s) {
  std::vector<Complex> v(s.amplitudes.data(),
                         s.amplitudes.data() + s.amplitudes.size());
  return Json{{"n_qubits", s.n_qubits}, {"amplitudes", complex_list(v)}};
}

Json to_json(const DeviceDerived& d) {
  auto arr3 = [](const std::array<double, 3>& a) {
    return Json{{"q1", a[0]}, {"c", a[1]}, {"q2", a[2]}};
  };
  return Json{{"ec_mhz", arr3(d.ec_mhz)},
              {"omega_ghz", arr3(d.omega_ghz)},
              {"alpha_mhz", arr3(d.alpha_mhz)},
              {"e_q1c_mhz", d.e_q1c_mhz},
              {"e_q2c_mhz", d.e_q2c_mhz},
              {"e_q1q2_mhz", d.e_q1q2_mhz},
              {"g_q1c_mhz", d.g_q1c_mhz},
              {"g_q2c_mhz", d.g_q2c_mhz},
              {"g_q1q2_mhz", d.g_q1q2_mhz}};
}

CapacitanceNetwork network_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("capacitances_ff") ||
      !j["capacitances_ff"].is_object())
    throw DomainError("device json: need object 'capacitances_ff'");
  CapacitanceNetwork n;
  for (const auto& [key, value] : j["capacitances_ff"].items()) {
    if (!value.is_number())
      throw DomainError("device json: capacitance '" + key + "' not numeric");
    n.mutuals_ff[key] = value.get<double>();
  }
  auto triple = [](const Json& a, const char* what) {
    if (!a.is_array() || a.size() != 3)
      throw DomainError(std::string("device json: '") + what +
                        "' must be [q1, c, q2]");
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
      if (!a[i].is_number())
        throw DomainError(std::string("device json: '") + what +
                          "' entries must be numbers");
      out[i] = a[i].get<double>();
    }
    return out;
  };
  if (j.contains("ej_ghz")) {
    n.ej_ghz = triple(j["ej_ghz"], "ej_ghz");
  } else if (j.contains("frequencies_ghz")) {
    n = tune_to_frequencies(n, triple(j["frequencies_ghz"], "frequencies_ghz"));
  } else {
    throw DomainError("device json: need 'ej_ghz' or 'frequencies_ghz'");
  }
  return n;
}

}  // namespace ashn::json_io
