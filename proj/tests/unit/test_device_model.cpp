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

#include "ashn/device_model.hpp"
#include "ashn/errors.hpp"
#include "ashn/mat_core.hpp"

using namespace ashn;
using Catch::Approx;

namespace {

CapacitanceNetwork symmetric() {
  CapacitanceNetwork n;
  n.mutuals_ff = {{"C01", 60}, {"C02", 60}, {"C12", 20}, {"C03", 80},
                  {"C04", 80}, {"C34", 30}, {"C05", 60}, {"C06", 60},
                  {"C56", 20}, {"C23", 5},  {"C45", 5}};
  n.ej_ghz = {15, 30, 15};
  return n;
}

}  // namespace

TEST_CASE("maxwell matrix is symmetric with mutuals off the diagonal") {
  const auto n = symmetric();
  const auto m = maxwell_matrix(n);
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(m(0, 1) == Approx(-20));
  CHECK(m(0, 0) == Approx(60 + 20 + 0));
  CHECK(m(1, 1) == Approx(60 + 20 + 5));
}

TEST_CASE("symmetric network gives matching qubits") {
  const auto d = derive(symmetric());
  CHECK(d.ec_mhz[0] == Approx(d.ec_mhz[2]).epsilon(1e-12));
  CHECK(d.e_q1c_mhz == Approx(d.e_q2c_mhz).epsilon(1e-12));
  CHECK(d.omega_ghz[0] == Approx(d.omega_ghz[2]).epsilon(1e-12));
  CHECK(d.ec_mhz[0] > 0);
}

TEST_CASE("doubling every capacitance halves the charging energies") {
  auto n = symmetric();
  const auto d1 = derive(n);
  for (auto& [k, v] : n.mutuals_ff) v *= 2;
  const auto d2 = derive(n);
  for (int e = 0; e < 3; ++e)
    CHECK(d2.ec_mhz[e] == Approx(d1.ec_mhz[e] / 2).epsilon(1e-10));
}

TEST_CASE("reference network magnitudes") {
  const auto n = tune_to_frequencies(reference_network(), {4.1, 5.72, 4.1});
  const auto d = derive(n);
  for (int e = 0; e < 3; ++e) {
    CHECK(d.ec_mhz[e] > 100);
    CHECK(d.ec_mhz[e] < 400);
  }
  CHECK(d.omega_ghz[0] == Approx(4.1).epsilon(1e-9));
  CHECK(d.omega_ghz[1] == Approx(5.72).epsilon(1e-9));
  // Order-of-magnitude check on the qubit-coupler coupling.
  CHECK(std::abs(d.g_q1c_mhz) > 45);
  CHECK(std::abs(d.g_q1c_mhz) < 180);
}

TEST_CASE("frequency inversion") {
  const double ej = ej_for_frequency(0.2, 4.1);
  CHECK(std::sqrt(8 * ej * 0.2) - 0.2 == Approx(4.1).epsilon(1e-12));
  CHECK_THROWS_AS(ej_for_frequency(0, 4), DomainError);
}

TEST_CASE("derive rejects bad input") {
  auto n = symmetric();
  n.mutuals_ff["C77"] = 1;
  CHECK_THROWS_AS(derive(n), DomainError);
  n = symmetric();
  n.mutuals_ff["C12"] = -1;
  CHECK_THROWS_AS(derive(n), DomainError);
  n = symmetric();
  n.mutuals_ff["C21"] = 1;
  CHECK_THROWS_AS(derive(n), DomainError);
}

TEST_CASE("effective coupling examples") {
  // With a 1 GHz detuning on both sides the exchange term is -g^2 / 1000.
  CHECK(effective_coupling(5, 90, 90, 4.1, 4.1, 5.1) ==
        Approx(5 - 8.1).epsilon(1e-12));
  CHECK(effective_coupling(0, 90, 90, 4.1, 4.1, 3.1) ==
        Approx(8.1).epsilon(1e-12));
  CHECK_THROWS_AS(effective_coupling(5, 90, 90, 4.1, 4.1, 4.1), DomainError);
}

TEST_CASE("zero coupling point") {
  CHECK(zero_coupling_frequency({}) == Approx(5.72).margin(1e-9));
  CouplingParams p;
  p.g12_mhz = 0;
  CHECK_THROWS_AS(zero_coupling_frequency(p), DomainError);
  p = {};
  p.w2_ghz = 4.3;
  const double wc = zero_coupling_frequency(p);
  CHECK(std::abs(effective_coupling(5, 90, 90, 4.1, 4.3, wc)) < 1e-9);
}

TEST_CASE("closed form agrees with an independent expression") {
  Rng rng(17);
  std::uniform_real_distribution<double> g(1, 120), w(3.5, 5.0), dc(0.3, 3);
  for (int i = 0; i < 100; ++i) {
    const double g12 = g(rng) / 10, g1 = g(rng), g2 = g(rng);
    const double w1 = w(rng), w2 = w(rng);
    const double wc = std::max(w1, w2) + dc(rng);
    const double D1 = (w1 - wc) * 1e3, D2 = (w2 - wc) * 1e3;
    const double ref = (2 * g12 * D1 * D2 + g1 * g2 * (D1 + D2)) / (2 * D1 * D2);
    CHECK(std::abs(effective_coupling(g12, g1, g2, w1, w2, wc) - ref) < 1e-12);
  }
}
