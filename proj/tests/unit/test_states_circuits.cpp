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

#include <catch_amalgamated.hpp>

#include "ashn/states_circuits.hpp"

using namespace ashn;
using Catch::Approx;

TEST_CASE("partial swap matrix") {
  const Matrix4 m = PartialSwapGate{0.25, 0.4}.matrix();
  CHECK(unitarity_defect(m) < 1e-14);
  CHECK(std::abs(m(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(m(3, 3) - 1.0) < 1e-15);
  CHECK(std::abs(m(1, 1) - std::sqrt(0.75)) < 1e-15);
  CHECK(std::abs(m(2, 2) - std::sqrt(0.75)) < 1e-15);
  CHECK(std::abs(m(1, 2) - std::polar(0.5, 0.4)) < 1e-15);
  CHECK(std::abs(m(2, 1) + std::polar(0.5, -0.4)) < 1e-15);
  const Matrix4 full = PartialSwapGate{1.0, 0.0}.matrix();
  CHECK(std::abs(full(1, 1)) < 1e-15);
}

TEST_CASE("W circuits for n = 2..12") {
  for (int n = 2; n <= 12; ++n) {
    INFO(n);
    const auto c = build_w_circuit(n);
    CHECK(c.two_qubit_count() == static_cast<std::size_t>(n - 1));
    const auto psi = simulate_circuit(c, Statevector::zero(n));
    CHECK(state_fidelity(psi, w_target(n)) >= 1 - 1e-10);
    // Equal weight on every single-excitation basis state.
    for (int q = 0; q < n; ++q) {
      const std::size_t idx = std::size_t{1} << (n - 1 - q);
      CHECK(std::norm(psi.amplitudes[idx]) == Approx(1.0 / n).epsilon(1e-10));
    }
  }
  CHECK(build_w_circuit(10).two_qubit_count() == 9);
}

TEST_CASE("phased W state") {
  const std::vector<double> ph{0.3, -1.2, 2.0};
  const auto psi = simulate_circuit(build_w_circuit(4, ph), Statevector::zero(4));
  CHECK(state_fidelity(psi, w_target(4, ph)) >= 1 - 1e-10);
  CHECK(state_fidelity(psi, w_target(4)) < 0.99);
  CHECK_THROWS_AS(build_w_circuit(4, {0.1}), DomainError);
}

TEST_CASE("W input validation") {
  CHECK_THROWS_AS(build_w_circuit(1), DomainError);
  CHECK_THROWS_AS(build_w_circuit(kMaxQubits + 1), DomainError);
}

TEST_CASE("dicke targets") {
  const auto d = dicke_target(4, 2);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < d.amplitudes.size(); ++i)
    if (std::abs(d.amplitudes[i]) > 0) {
      ++nonzero;
      CHECK(std::norm(d.amplitudes[i]) == Approx(1.0 / 6));
    }
  CHECK(nonzero == 6);
  CHECK(state_fidelity(dicke_target(5, 1), w_target(5)) ==
        Approx(1).margin(1e-12));
  CHECK_THROWS_AS(dicke_target(3, 4), DomainError);
}

TEST_CASE("circuit validation") {
  CircuitSpec c;
  c.n_qubits = 3;
  CHECK_THROWS_AS(c.add({0, 3}, Matrix4::Identity(), "bad"), DomainError);
  CHECK_THROWS_AS(c.add({1, 1}, Matrix4::Identity(), "dup"), DomainError);
  CHECK_THROWS_AS(c.add({0, 1}, 2.0 * Matrix4::Identity(), "nonunitary"),
                  DomainError);
  CHECK_THROWS_AS(c.add({0}, Matrix4::Identity(), "size"), DomainError);
}

TEST_CASE("non-adjacent targets and ordering") {
  // X on qubit 2 of 3 sets the least significant bit.
  CircuitSpec c;
  c.n_qubits = 3;
  c.add({2}, pauli::X(), "x");
  const auto psi = simulate_circuit(c, Statevector::zero(3));
  CHECK(std::abs(psi.amplitudes[1] - 1.0) < 1e-15);
  // Swap of qubits 0 and 2.
  Matrix4 sw = Matrix4::Zero();
  sw(0, 0) = sw(3, 3) = sw(1, 2) = sw(2, 1) = 1;
  CircuitSpec d;
  d.n_qubits = 3;
  d.add({0, 2}, sw, "swap");
  const auto out = simulate_circuit(d, psi);
  CHECK(std::abs(out.amplitudes[4] - 1.0) < 1e-15);
}

TEST_CASE("fidelity measures") {
  const auto w = w_target(3);
  const Eigen::MatrixXcd rho = density(w);
  CHECK(state_fidelity(rho, w) == Approx(1).margin(1e-12));
  CHECK(uhlmann_fidelity(rho, rho) == Approx(1).margin(1e-9));
  const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(8, 8) / 8.0;
  CHECK(state_fidelity(mixed, w) == Approx(1.0 / 8).margin(1e-12));
  CHECK(uhlmann_fidelity(rho, mixed) == Approx(1.0 / 8).margin(1e-9));
  CHECK_THROWS_AS(state_fidelity(Eigen::MatrixXcd(2.0 * mixed), w),
                  DomainError);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(4);
  bad[0] = 2;
  CHECK_THROWS_AS(Statevector::from(2, bad), DomainError);
}
