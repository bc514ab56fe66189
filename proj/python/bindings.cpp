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

// Python bindings. Matrices cross as complex numpy arrays; results come
// back as plain dicts so the Python side needs no wrapper classes.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ashn/bench_noise.hpp"
#include "ashn/bgate_compiler.hpp"
#include "ashn/device_model.hpp"
#include "ashn/evolve_verify.hpp"
#include "ashn/pulse_program.hpp"
#include "ashn/states_circuits.hpp"

namespace py = pybind11;
using namespace ashn;

namespace {

using Point = std::tuple<double, double, double>;

Point tup(const WeylPoint& p) { return {p.a, p.b, p.c}; }

Unitary4 u4(const Eigen::MatrixXcd& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DomainError("expected a 4x4 matrix");
  return Unitary4(Matrix4(m));
}

Unitary2 u2(const Eigen::MatrixXcd& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("expected a 2x2 matrix");
  return Unitary2(Matrix2(m));
}

py::dict controls_dict(const NormalizedControls& c, double g_mhz) {
  const PhysicalControls p = to_physical(c, g_mhz);
  py::dict d;
  d["tau"] = c.tau;
  d["omega1"] = c.omega1;
  d["omega2"] = c.omega2;
  d["delta"] = c.delta;
  d["variant"] = to_string(c.variant);
  d["mirrored"] = c.mirrored;
  d["t_ns"] = p.t_ns;
  d["omega1_mhz"] = p.omega1_mhz;
  d["omega2_mhz"] = p.omega2_mhz;
  d["delta_mhz"] = p.delta_mhz;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-qubit gate synthesis and pulse compilation";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<CompileError>(m, "CompileError", PyExc_RuntimeError);

  m.def("weyl_unitary", [](double a, double b, double c) {
    return Eigen::MatrixXcd(weyl_unitary({a, b, c}).matrix());
  }, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("kak", [](const Eigen::MatrixXcd& mat) {
    const KakFactors k = kak_decompose(u4(mat));
    py::dict d;
    d["point"] = tup(k.point);
    d["phase"] = k.phase;
    d["k1"] = Eigen::MatrixXcd(k.k1.matrix());
    d["k2"] = Eigen::MatrixXcd(k.k2.matrix());
    d["k3"] = Eigen::MatrixXcd(k.k3.matrix());
    d["k4"] = Eigen::MatrixXcd(k.k4.matrix());
    return d;
  }, py::arg("matrix"), "phase (k1 x k2) W(point) (k3 x k4) = matrix");

  m.def("canonicalize", [](double a, double b, double c) {
    const CanonicalForm f = canonicalize({a, b, c});
    return std::make_pair(tup(f.point), f.mirrored);
  }, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("named_gates", [] {
    std::map<std::string, Point> out;
    for (const auto& g : named_gates()) out[g.name] = tup(canonicalize(g.point).point);
    return out;
  });

  m.def("synthesize", [](double a, double b, double c, double h, double r,
                         std::optional<double> cap, double g_mhz) {
    SynthesisRequest q;
    q.point = {a, b, c};
    q.h = h;
    q.r = r;
    q.amplitude_cap = cap;
    return controls_dict(synthesize(q), g_mhz);
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("h") = 0.0,
     py::arg("r") = 0.0, py::arg("cap") = py::none(), py::arg("g_mhz") = 6.25);

  m.def("verify", [](double a, double b, double c, double tau, double omega1,
                     double omega2, double delta) {
    NormalizedControls ctl;
    ctl.tau = tau;
    ctl.omega1 = omega1;
    ctl.omega2 = omega2;
    ctl.delta = delta;
    const VerificationReport r = verify_controls(ctl, {a, b, c});
    py::dict d;
    d["achieved"] = tup(r.achieved);
    d["distance"] = r.distance;
    d["passed"] = r.passed;
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tau"),
     py::arg("omega1"), py::arg("omega2"), py::arg("delta"));

  m.def("compile_two_b", [](const Eigen::MatrixXcd& mat) {
    const BGateProgram p = compile_two_b(u4(mat));
    py::dict d;
    d["b_count"] = p.b_count;
    d["residual"] = p.residual;
    d["phase"] = p.phase;
    d["k1"] = Eigen::MatrixXcd(p.k1.matrix());
    d["k2"] = Eigen::MatrixXcd(p.k2.matrix());
    d["s1"] = Eigen::MatrixXcd(p.s1.matrix());
    d["s2"] = Eigen::MatrixXcd(p.s2.matrix());
    d["k3"] = Eigen::MatrixXcd(p.k3.matrix());
    d["k4"] = Eigen::MatrixXcd(p.k4.matrix());
    d["reconstruction"] = Eigen::MatrixXcd(p.reconstruct().matrix());
    return d;
  }, py::arg("matrix"));

  m.def("b_matrix", [] { return Eigen::MatrixXcd(b_matrix().matrix()); });

  m.def("pmw4", [](const Eigen::MatrixXcd& mat) {
    const Pmw4Sequence s = pmw4_compile(u2(mat));
    py::dict d;
    d["phases"] = s.phases;
    d["product"] = Eigen::MatrixXcd(s.product().matrix());
    return d;
  }, py::arg("matrix"), "pulse phases in matrix order");

  m.def("xeb", [](std::vector<int> depths, int circuits, std::uint64_t seed,
                  double depolarizing, const std::string& gate) {
    XebConfig cfg;
    cfg.depths = std::move(depths);
    cfg.circuits_per_depth = circuits;
    cfg.seed = seed;
    cfg.noise.depolarizing_per_cycle = depolarizing;
    cfg.two_qubit_gate = weyl_unitary(canonicalize(find_named_gate(gate).point).point);
    const XebResult r = xeb_run(cfg);
    py::dict d;
    d["depths"] = r.depths;
    d["fidelity"] = r.per_depth_fidelity;
    d["error_per_cycle"] = r.fitted_error_per_cycle;
    d["fit_ok"] = r.fit_ok;
    return d;
  }, py::arg("depths"), py::arg("circuits") = 50, py::arg("seed"),
     py::arg("depolarizing") = 0.0, py::arg("gate") = "b");

  m.def("w_state", [](int n, std::vector<double> phases) {
    const CircuitSpec c = build_w_circuit(n, phases);
    const Statevector s = simulate_circuit(c, Statevector::zero(n));
    return std::make_pair(Eigen::VectorXcd(s.amplitudes), c.two_qubit_count());
  }, py::arg("n"), py::arg("phases") = std::vector<double>{},
     "(amplitudes, two-qubit gate count); qubit 0 is the most significant bit");

  m.def("dicke_state", [](int n, int k) {
    return Eigen::VectorXcd(dicke_target(n, k).amplitudes);
  }, py::arg("n"), py::arg("k"));

  m.def("effective_coupling", &effective_coupling, py::arg("g12"),
        py::arg("g1c"), py::arg("g2c"), py::arg("w1"), py::arg("w2"),
        py::arg("wc"), "MHz couplings, GHz frequencies");

  m.def("zero_coupling_frequency", [](double g12, double g1c, double g2c,
                                      double w1, double w2) {
    CouplingParams p;
    p.g12_mhz = g12;
    p.g1c_mhz = g1c;
    p.g2c_mhz = g2c;
    p.w1_ghz = w1;
    p.w2_ghz = w2;
    return zero_coupling_frequency(p);
  }, py::arg("g12") = 5.0, py::arg("g1c") = 90.0, py::arg("g2c") = 90.0,
     py::arg("w1") = 4.1, py::arg("w2") = 4.1);
}
