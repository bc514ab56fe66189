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

#pragma once

/**
 * @file
 * Lowering to pulses: four-pulse single-qubit compilation, frame phases,
 * sampled envelopes and full two-qubit gate schedules.
 */

#include <array>
#include <optional>
#include <vector>

#include "ashn/ashn_synth.hpp"
#include "ashn/weyl_kak.hpp"

namespace ashn {

/** [[e^{ia} cos g, -e^{-ib} sin g], [e^{ib} sin g, e^{-ia} cos g]]. */
struct EulerAngles {
  double alpha = 0, beta = 0, gamma = 0;
  Unitary2 matrix() const;
};

/** Branch: gamma in [0, pi/2], alpha in [-pi/2, pi/2], beta in [-pi, pi]. */
EulerAngles euler_angles(const Unitary2& u);

/** exp(-i pi/4 (cos p X + sin p Y)). */
Unitary2 x90(double phase);

/**
 * Four pi/2 pulses. phases are in matrix order: the product is
 * x90(phases[0]) x90(phases[1]) x90(phases[2]) x90(phases[3]), so
 * phases[3] is played first.
 */
struct Pmw4Sequence {
  std::array<double, 4> phases{};
  EulerAngles angles;

  Unitary2 product() const;
  std::array<double, 4> playback_order() const;
};

Pmw4Sequence pmw4_from_euler(const EulerAngles& e);
/** Compiles u / sqrt(det u). */
Pmw4Sequence pmw4_compile(const Unitary2& u);

/** Rotating-frame phase gates for one square interaction window. */
struct FrameCorrection {
  Unitary2 z1, z2, z3, z4;
  double omega1 = 0, omega2 = 0;
  double tau = 0;

  /** (Z3 x Z4) u (Z1 x Z2). */
  Unitary4 to_frame(const Unitary4& u) const;
  /** (Z3^dag x Z4^dag) u (Z1^dag x Z2^dag). */
  Unitary4 from_frame(const Unitary4& u) const;
};

/** Throws DomainError for tau < 0. */
FrameCorrection frame_corrections(double omega1, double omega2, double tau);

/** Samples at t_k = k * duration / N, N = round(duration * rate). */
struct SampledWaveform {
  double sample_rate = 2.0;
  double duration_ns = 0;
  std::vector<Complex> samples;

  double time_at(std::size_t k) const;
};

inline constexpr double kDefaultSampleRate = 2.0;

/** Cosine envelope with DRAG quadrature A(t) - i drag dA/dt. */
SampledWaveform envelope_xy(double amplitude, double t_g, double drag,
                            double rate = kDefaultSampleRate);
/** Value of the cosh-edge flux shape at t (amplitude 1). */
double flux_shape(double t, double w, double p, double e);
SampledWaveform envelope_flux(double amplitude, double w, double p, double e,
                              double rate = kDefaultSampleRate);

struct ScheduleOptions {
  double rate = kDefaultSampleRate;
  double edge_ns = 2.5;
  double steepness = 10.0;
  /** Flux amplitudes in arbitrary units; coupler defaults to g. */
  double qubit_flux = 0.0;
  std::optional<double> coupler_flux;
  /**
   * Static Z phases measured separately: qubit 1 before, qubit 2 before,
   * qubit 1 after, qubit 2 after. Folded into the merged locals.
   */
  std::array<double, 4> static_z{0, 0, 0, 0};
};

struct GateSchedule {
  SampledWaveform xy1, xy2;
  SampledWaveform z1, zc, z2;
  /** Merged single-qubit content before and after the window, per qubit. */
  std::array<Pmw4Sequence, 2> prologue, epilogue;
  double t_ns = 0;
};

/**
 * One block for `first` followed in time by `second`; used to fuse one
 * gate's epilogue with the next gate's prologue.
 */
Pmw4Sequence merge_blocks(const Pmw4Sequence& first,
                          const Pmw4Sequence& second);

/**
 * The compensators satisfy phase (l1 x l2) U (r1 x r2) = W(target) for the
 * drive-frame evolution U; frames map U to the qubit frame. The prologue is
 * Z1^dag r1 / Z2^dag r2 and the epilogue l1 Z3^dag / l2 Z4^dag, each with
 * the static Z offsets applied.
 */
GateSchedule schedule_gate(const PhysicalControls& c,
                           const LocalAlignment& compensators,
                           const FrameCorrection& frames,
                           const ScheduleOptions& opt = {});

}  // namespace ashn
