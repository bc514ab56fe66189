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

#include "ashn/pulse_program.hpp"

#include <cmath>

namespace ashn {

namespace {

double wrap_pi(double x) {
  x = std::remainder(x, 2 * kPi);
  return x == -kPi ? kPi : x;
}

Unitary2 z_phase(double theta) {
  Matrix2 m = Matrix2::Identity();
  m(1, 1) = std::polar(1.0, theta);
  return Unitary2::trusted(m);
}

std::size_t sample_count(double duration, double rate) {
  return static_cast<std::size_t>(std::max(1.0, std::round(duration * rate)));
}

}  // namespace

Unitary2 EulerAngles::matrix() const {
  Matrix2 m;
  m << std::polar(std::cos(gamma), alpha), -std::polar(std::sin(gamma), -beta),
      std::polar(std::sin(gamma), beta), std::polar(std::cos(gamma), -alpha);
  return Unitary2::trusted(m);
}

EulerAngles euler_angles(const Unitary2& u) {
  Matrix2 s = u.special().matrix();
  Complex p = s(0, 0), q = s(1, 0);
  EulerAngles e;
  e.gamma = std::atan2(std::abs(q), std::abs(p));
  constexpr double kTiny = 1e-14;
  e.alpha = std::abs(p) > kTiny ? std::arg(p) : 0.0;
  e.beta = std::abs(q) > kTiny ? std::arg(q) : 0.0;
  // -u has the same action; use it to bring alpha into [-pi/2, pi/2].
  if (std::abs(e.alpha) > kPi / 2) {
    e.alpha -= std::copysign(kPi, e.alpha);
    if (std::abs(q) > kTiny) e.beta = wrap_pi(e.beta + kPi);
  }
  return e;
}

Unitary2 x90(double phase) {
  const double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  Matrix2 m;
  m << c, -kI * s * std::polar(1.0, -phase), -kI * s * std::polar(1.0, phase),
      c;
  return Unitary2::trusted(m);
}

Unitary2 Pmw4Sequence::product() const {
  return x90(phases[0]) * x90(phases[1]) * x90(phases[2]) * x90(phases[3]);
}

std::array<double, 4> Pmw4Sequence::playback_order() const {
  return {phases[3], phases[2], phases[1], phases[0]};
}

Pmw4Sequence pmw4_from_euler(const EulerAngles& e) {
  Pmw4Sequence seq;
  const double mid = e.beta - e.gamma + kPi;
  seq.phases = {-e.alpha + e.beta, mid, mid, e.alpha + e.beta};
  seq.angles = e;
  return seq;
}

Pmw4Sequence pmw4_compile(const Unitary2& u) {
  return pmw4_from_euler(euler_angles(u));
}

Unitary4 FrameCorrection::to_frame(const Unitary4& u) const {
  return kron(z3, z4) * u * kron(z1, z2);
}

Unitary4 FrameCorrection::from_frame(const Unitary4& u) const {
  return kron(z3.adjoint(), z4.adjoint()) * u *
         kron(z1.adjoint(), z2.adjoint());
}

FrameCorrection frame_corrections(double omega1, double omega2, double tau) {
  if (!(tau >= 0)) throw DomainError("frame_corrections: tau must be >= 0");
  FrameCorrection f;
  f.omega1 = omega1;
  f.omega2 = omega2;
  f.tau = tau;
  f.z1 = z_phase(omega1 * tau);
  f.z2 = z_phase(omega2 * tau);
  f.z3 = z_phase(-omega1 * tau);
  f.z4 = z_phase(-omega2 * tau);
  return f;
}

double SampledWaveform::time_at(std::size_t k) const {
  if (samples.size() < 2) return 0.0;
  return duration_ns * static_cast<double>(k) /
         static_cast<double>(samples.size() - 1);
}

SampledWaveform envelope_xy(double amplitude, double t_g, double drag,
                            double rate) {
  if (!(t_g > 0)) throw DomainError("envelope_xy: t_g must be > 0");
  if (!(rate > 0)) throw DomainError("envelope_xy: rate must be > 0");
  SampledWaveform w;
  const std::size_t n = sample_count(t_g, rate);
  w.duration_ns = t_g;
  w.sample_rate = static_cast<double>(n) / t_g;
  w.samples.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0 || k == n) {
      w.samples[k] = 0.0;
      continue;
    }
    const double x = 2 * kPi * static_cast<double>(k) / static_cast<double>(n);
    const double a = amplitude / 2 * (1 - std::cos(x));
    const double da = amplitude * kPi / t_g * std::sin(x);
    w.samples[k] = Complex(a, -drag * da);
  }
  return w;
}

double flux_shape(double t, double w, double p, double e) {
  const double top = std::cosh(e / 2);
  const double norm = top - 1.0;
  if (t <= 0 || t >= 2 * w + p) return 0.0;
  if (t < w) return (top - std::cosh(e * (t - w) / (2 * w))) / norm;
  if (t <= w + p) return 1.0;
  return (top - std::cosh(e * (t - w - p) / (2 * w))) / norm;
}

SampledWaveform envelope_flux(double amplitude, double w, double p, double e,
                              double rate) {
  if (!(w > 0) || !(p > 0))
    throw DomainError("envelope_flux: w and p must be > 0");
  if (!(e > 0)) throw DomainError("envelope_flux: steepness must be > 0");
  if (!(rate > 0)) throw DomainError("envelope_flux: rate must be > 0");
  SampledWaveform out;
  const double dur = 2 * w + p;
  const std::size_t n = sample_count(dur, rate);
  out.duration_ns = dur;
  out.sample_rate = static_cast<double>(n) / dur;
  out.samples.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0 || k == n) {
      out.samples[k] = 0.0;
      continue;
    }
    out.samples[k] = amplitude * flux_shape(out.time_at(k), w, p, e);
  }
  return out;
}

Pmw4Sequence merge_blocks(const Pmw4Sequence& first,
                          const Pmw4Sequence& second) {
  return pmw4_compile(second.product() * first.product());
}

GateSchedule schedule_gate(const PhysicalControls& c,
                           const LocalAlignment& comp,
                           const FrameCorrection& frames,
                           const ScheduleOptions& opt) {
  if (!(c.t_ns > 0)) throw DomainError("schedule_gate: t_ns must be > 0");
  if (c.g_mhz < 0 || c.omega1_mhz < 0 || c.omega2_mhz < 0)
    throw DomainError("schedule_gate: amplitudes must be >= 0");
  if (!(opt.edge_ns > 0)) throw DomainError("schedule_gate: edge must be > 0");

  GateSchedule s;
  s.t_ns = c.t_ns;
  const double w = std::min(opt.edge_ns, c.t_ns / 4);
  const double p = c.t_ns - 2 * w;

  // Flux on all three lines shares one window.
  s.zc = envelope_flux(opt.coupler_flux.value_or(c.g_mhz), w, p,
                       opt.steepness, opt.rate);
  s.z1 = envelope_flux(opt.qubit_flux, w, p, opt.steepness, opt.rate);
  s.z2 = s.z1;

  // XY: same window, carrier offset by -delta relative to the qubit frame.
  auto xy = [&](double amp, double phi) {
    SampledWaveform out = s.zc;
    for (std::size_t k = 0; k < out.samples.size(); ++k) {
      const double t_us = out.time_at(k) * 1e-3;
      const double shape = flux_shape(out.time_at(k), w, p, opt.steepness);
      out.samples[k] = amp * shape *
                       std::polar(1.0, phi - 2 * kPi * c.delta_mhz * t_us);
      if (k == 0 || k + 1 == out.samples.size()) out.samples[k] = 0.0;
    }
    return out;
  };
  s.xy1 = xy(c.omega1_mhz, c.phi1);
  s.xy2 = xy(c.omega2_mhz, c.phi2);

  const Unitary2 pre1 = z_phase(opt.static_z[0]).adjoint();
  const Unitary2 pre2 = z_phase(opt.static_z[1]).adjoint();
  const Unitary2 post1 = z_phase(opt.static_z[2]).adjoint();
  const Unitary2 post2 = z_phase(opt.static_z[3]).adjoint();
  s.prologue[0] = pmw4_compile(pre1 * frames.z1.adjoint() * comp.r1);
  s.prologue[1] = pmw4_compile(pre2 * frames.z2.adjoint() * comp.r2);
  s.epilogue[0] = pmw4_compile(comp.l1 * frames.z3.adjoint() * post1);
  s.epilogue[1] = pmw4_compile(comp.l2 * frames.z4.adjoint() * post2);
  return s;
}

}  // namespace ashn
