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

#include "ashn/evolve_verify.hpp"
#include "ashn/pulse_program.hpp"

using namespace ashn;
using Catch::Approx;

namespace {

Unitary4 target_of(const WeylPoint& p) { return weyl_unitary(p); }

struct Compiled {
  NormalizedControls norm;
  PhysicalControls phys;
  LocalAlignment comp;
  FrameCorrection frames;
  Unitary4 drive_frame;
};

Compiled compile_point(const WeylPoint& p, double g_mhz = 6.25) {
  Compiled c;
  SynthesisRequest q;
  q.point = p;
  c.norm = synthesize(q);
  c.phys = to_physical(c.norm, g_mhz);
  c.drive_frame = evolve(drive_from(c.norm));
  c.comp = align_locals(target_of(p), c.drive_frame);
  c.frames = frame_corrections(c.norm.delta, c.norm.delta, c.norm.tau);
  return c;
}

}  // namespace

TEST_CASE("pmw4 phases for the identity and Haar inputs") {
  const auto id = pmw4_compile(Unitary2());
  CHECK(id.phases[0] == Approx(0).margin(1e-12));
  CHECK(std::abs(id.phases[1]) == Approx(kPi).margin(1e-12));
  CHECK(std::abs(id.phases[2]) == Approx(kPi).margin(1e-12));
  CHECK(id.phases[3] == Approx(0).margin(1e-12));
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Unitary2 u = haar_unitary2(rng).special();
    CHECK(phase_align(pmw4_compile(u).product(), u).residual < 1e-12);
  }
}

TEST_CASE("playback order reverses matrix order") {
  Pmw4Sequence s;
  s.phases = {1, 2, 3, 4};
  const auto pb = s.playback_order();
  CHECK(pb[0] == 4);
  CHECK(pb[3] == 1);
}

TEST_CASE("euler branch") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Unitary2 u = haar_unitary2(rng).special();
    const EulerAngles e = euler_angles(u);
    CHECK(e.gamma >= -1e-12);
    CHECK(e.gamma <= kPi / 2 + 1e-12);
    CHECK(std::abs(e.alpha) <= kPi / 2 + 1e-12);
    CHECK(std::abs(e.beta) <= kPi + 1e-12);
    CHECK(phase_align(e.matrix(), u).residual < 1e-12);
  }
}

TEST_CASE("x90 is a quarter turn") {
  const Unitary2 x = x90(0);
  CHECK(phase_align(x * x, exp_pauli(Axis::X, -kPi / 2)).residual < 1e-14);
}

TEST_CASE("frame round trip") {
  Rng rng(9);
  const auto f = frame_corrections(0.7, -0.3, 1.9);
  for (int i = 0; i < 50; ++i) {
    const Unitary4 u = haar_unitary4(rng);
    CHECK(max_abs(f.from_frame(f.to_frame(u)).matrix() - u.matrix()) < 1e-12);
  }
  const auto zero = frame_corrections(0.7, -0.3, 0);
  const Unitary4 u = haar_unitary4(rng);
  CHECK(max_abs(zero.to_frame(u).matrix() - u.matrix()) < 1e-14);
  CHECK_THROWS_AS(frame_corrections(0.1, 0.1, -1), DomainError);
}

TEST_CASE("xy envelope examples") {
  const auto w = envelope_xy(1.0, 20, 0);
  REQUIRE(w.samples.size() == 41);
  CHECK(w.samples[20].real() == Approx(1.0).margin(1e-12));
  CHECK(w.samples[10].real() == Approx(0.5).margin(1e-12));
  CHECK(std::abs(w.samples.front()) == 0);
  CHECK(std::abs(w.samples.back()) == 0);
  CHECK(w.time_at(20) == Approx(10));
  const auto d = envelope_xy(1.0, 20, 0.5);
  CHECK(d.samples[20].imag() == Approx(0).margin(1e-12));
  CHECK(d.samples[10].imag() < 0);
  CHECK_THROWS_AS(envelope_xy(1.0, 0, 0), DomainError);
}

TEST_CASE("flux shape") {
  const double w = 2.5, p = 35, e = 10;
  CHECK(flux_shape(0, w, p, e) == 0);
  CHECK(flux_shape(w, w, p, e) == Approx(1).margin(1e-12));
  CHECK(flux_shape(w + p / 2, w, p, e) == 1);
  CHECK(flux_shape(2 * w + p, w, p, e) == 0);
  // Continuous at the plateau joints.
  CHECK(flux_shape(w - 1e-9, w, p, e) == Approx(1).margin(1e-6));
  CHECK(flux_shape(w + p + 1e-9, w, p, e) == Approx(1).margin(1e-6));
  const auto f = envelope_flux(6.25, w, p, e);
  CHECK(f.duration_ns == 40);
  CHECK(f.samples.size() == 81);
  double peak = 0;
  for (auto s : f.samples) peak = std::max(peak, std::abs(s));
  CHECK(peak == Approx(6.25));
  CHECK_THROWS_AS(envelope_flux(1, 0, 1, 1), DomainError);
}

TEST_CASE("iSWAP schedule is flux only") {
  const auto c = compile_point({kPi / 4, kPi / 4, 0});
  const auto s = schedule_gate(c.phys, c.comp, c.frames);
  CHECK(s.t_ns == Approx(40).epsilon(1e-6));
  REQUIRE(s.zc.samples.size() == 81);
  for (auto v : s.xy1.samples) CHECK(std::abs(v) < 1e-12);
  for (auto v : s.xy2.samples) CHECK(std::abs(v) < 1e-12);
  double peak = 0;
  for (auto v : s.zc.samples) peak = std::max(peak, std::abs(v));
  CHECK(peak == Approx(6.25));
}

TEST_CASE("short windows clamp the edge") {
  const auto c = compile_point({kPi / 4, kPi / 8, 0});
  ScheduleOptions opt;
  opt.edge_ns = 100;
  const auto s = schedule_gate(c.phys, c.comp, c.frames, opt);
  CHECK(s.zc.duration_ns == Approx(c.phys.t_ns).epsilon(1e-12));
  PhysicalControls bad = c.phys;
  bad.t_ns = 0;
  CHECK_THROWS_AS(schedule_gate(bad, c.comp, c.frames), DomainError);
}

TEST_CASE("schedule blocks reconstruct the target") {
  for (const auto& g : named_gates()) {
    INFO(g.name);
    const WeylPoint p = canonicalize(g.point).point;
    const auto c = compile_point(p);
    const auto s = schedule_gate(c.phys, c.comp, c.frames);
    const Unitary4 lab = c.frames.to_frame(c.drive_frame);
    const Unitary4 pre =
        kron(s.prologue[0].product(), s.prologue[1].product());
    const Unitary4 post =
        kron(s.epilogue[0].product(), s.epilogue[1].product());
    CHECK(phase_align(post * lab * pre, target_of(p)).residual < 1e-9);
  }
}

TEST_CASE("static Z offsets are compensated") {
  const WeylPoint p{kPi / 4, kPi / 8, 0};
  const auto c = compile_point(p);
  ScheduleOptions opt;
  opt.static_z = {0.3, -0.2, 0.5, 0.1};
  const auto s = schedule_gate(c.phys, c.comp, c.frames, opt);
  // diag(1, e^{it}) up to phase.
  auto zp = [](double t) { return exp_pauli(Axis::Z, -t / 2); };
  // Flux-induced phases land either side of the lab-frame window.
  const Unitary4 lab = kron(zp(0.5), zp(0.1)) *
                       c.frames.to_frame(c.drive_frame) *
                       kron(zp(0.3), zp(-0.2));
  const Unitary4 pre = kron(s.prologue[0].product(), s.prologue[1].product());
  const Unitary4 post = kron(s.epilogue[0].product(), s.epilogue[1].product());
  CHECK(phase_align(post * lab * pre, target_of(p)).residual < 1e-9);
}

TEST_CASE("merge blocks fuses in time order") {
  Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    const auto a = pmw4_compile(haar_unitary2(rng));
    const auto b = pmw4_compile(haar_unitary2(rng));
    const auto m = merge_blocks(a, b);
    CHECK(phase_align(m.product(), b.product() * a.product()).residual <
          1e-12);
  }
}
