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

// Randomized invariants across modules, fixed seeds.

#include <catch_amalgamated.hpp>

#include "ashn/bench_noise.hpp"
#include "ashn/bgate_compiler.hpp"
#include "ashn/evolve_verify.hpp"
#include "ashn/pulse_program.hpp"
#include "ashn/states_circuits.hpp"

using namespace ashn;

namespace {

WeylPoint random_chamber_point(Rng& rng) {
  std::uniform_real_distribution<double> u(0, kPi / 4);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng) - kPi / 8;
    const WeylPoint p{a, b, c};
    if (is_canonical(p) && b > 0.02 && a > 0.02) return p;
  }
}

}  // namespace

TEST_CASE("kak of a random product round trips") {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const Unitary4 u = haar_unitary4(rng);
    const KakFactors k = kak_decompose(u);
    CHECK(is_canonical(k.point));
    CHECK(max_abs(k.reconstruct().matrix() - u.matrix()) < 1e-9);
  }
}

TEST_CASE("local dressing does not move the interaction class") {
  Rng rng(102);
  for (int i = 0; i < 100; ++i) {
    const Unitary4 u = haar_unitary4(rng);
    const Unitary4 v = kron(haar_unitary2(rng), haar_unitary2(rng)) * u *
                       kron(haar_unitary2(rng), haar_unitary2(rng));
    CHECK(weyl_distance(kak_decompose(u).point, kak_decompose(v).point) <
          1e-9);
  }
}

TEST_CASE("canonicalize is idempotent") {
  Rng rng(103);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 500; ++i) {
    const WeylPoint p{u(rng), u(rng), u(rng)};
    const WeylPoint c = canonicalize(p).point;
    CHECK(is_canonical(c));
    const WeylPoint cc = canonicalize(c).point;
    CHECK(weyl_distance(c, cc) < 1e-12);
    // Same class: the Weyl unitaries agree up to locals.
    CHECK(weyl_distance(kak_decompose(weyl_unitary(p)).point, c) < 1e-8);
  }
}

TEST_CASE("synthesized controls reach random chamber points") {
  Rng rng(104);
  for (int i = 0; i < 60; ++i) {
    const WeylPoint p = random_chamber_point(rng);
    SynthesisRequest q;
    q.point = p;
    const auto c = synthesize(q);
    INFO(p.a << " " << p.b << " " << p.c);
    CHECK(c.tau > 0);
    CHECK(verify_controls(c, p).passed);
  }
}

TEST_CASE("two-B compilation always uses at most two B gates") {
  Rng rng(105);
  for (int i = 0; i < 60; ++i) {
    const Unitary4 u = haar_unitary4(rng);
    const auto p = compile_two_b(u);
    CHECK(p.b_count <= 2);
    CHECK(max_abs(p.reconstruct().matrix() - u.matrix()) < 1e-9);
  }
}

TEST_CASE("pmw4 is exact for any SU(2)") {
  Rng rng(106);
  for (int i = 0; i < 500; ++i) {
    const Unitary2 u = haar_unitary2(rng);
    CHECK(phase_align(pmw4_compile(u).product(), u).residual < 1e-12);
  }
}

TEST_CASE("circuits preserve norm") {
  Rng rng(107);
  std::uniform_real_distribution<double> up(0, 1), uph(-kPi, kPi);
  for (int n = 2; n <= 8; ++n) {
    CircuitSpec c;
    c.n_qubits = n;
    for (int k = 0; k < 3 * n; ++k) {
      const int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % n);
      if (a == b) b = (a + 1) % n;
      c.add({a, b}, PartialSwapGate{up(rng), uph(rng)}.matrix(), "ps");
    }
    const auto psi = simulate_circuit(c, w_target(n));
    CHECK(std::abs(psi.amplitudes.norm() - 1) < 1e-12);
  }
}

TEST_CASE("xeb fidelity is bounded by one for the ideal distribution") {
  Rng rng(108);
  std::uniform_real_distribution<double> u(0.01, 1);
  for (int i = 0; i < 200; ++i) {
    std::array<double, 4> e;
    double s = 0;
    for (double& x : e) s += (x = u(rng));
    for (double& x : e) x /= s;
    CHECK(xeb_fidelity(e, e) == Catch::Approx(1).margin(1e-12));
  }
}
