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
 * Closed-form and root-finding synthesis of drive controls (tau, Omega1,
 * Omega2, Delta) for a target interaction class, all in g = 1 units.
 */

#include <optional>
#include <string>
#include <vector>

#include "ashn/weyl_kak.hpp"

namespace ashn {

enum class Variant { ND, ND_EXT, EA_PLUS, EA_MINUS };

std::string to_string(Variant v);

struct SynthesisRequest {
  WeylPoint point;
  double h = 0;
  /** EXT threshold duration; 0 never prefers the extended branch. */
  double r = 0;
  std::optional<double> amplitude_cap;
};

struct AmplitudeAdvisory {
  double max_amplitude = 0;
  double cap = 0;
  /** Smallest r routing to the extended branch under the cap, if any. */
  std::optional<double> recommended_r;
};

struct NormalizedControls {
  double tau = 0;
  /** Signed amplitudes; a negative value is a drive phase of pi. */
  double omega1 = 0, omega2 = 0;
  double delta = 0;
  Variant variant = Variant::ND;
  bool mirrored = false;
  /** (alpha, beta) root for the EA variants. */
  std::optional<std::pair<double, double>> ea_root;
  std::optional<AmplitudeAdvisory> advisory;

  double amplitude1() const { return std::abs(omega1); }
  double amplitude2() const { return std::abs(omega2); }
};

struct PhysicalControls {
  double g_mhz = 0;
  double t_ns = 0;
  double omega1_mhz = 0, omega2_mhz = 0;
  /** Drive phases, 0 or pi, carrying the amplitude signs. */
  double phi1 = 0, phi2 = 0;
  double delta_mhz = 0;
};

struct DispatchDurations {
  double nd, ea_plus, ea_minus;
  double nd_mirror, ea_plus_mirror, ea_minus_mirror;
  double tau1() const;
  double tau2() const;
};

DispatchDurations dispatch_durations(const WeylPoint& p, double h);

/** Inverse of sin(x)/x on [0, pi], by bisection. */
double sinc_inv(double v);

NormalizedControls synth_nd(const SynthesisRequest& req);
NormalizedControls synth_nd_ext(const SynthesisRequest& req);
NormalizedControls synth_ea_plus(const SynthesisRequest& req);
NormalizedControls synth_ea_minus(const SynthesisRequest& req);
NormalizedControls synthesize(const SynthesisRequest& req);

/** |F(alpha, beta) - S| of the EA equation; (0, 0) by its alpha = 0 limit. */
double ea_residual(const WeylPoint& p, double h, double alpha, double beta);

/** Smallest r whose extended-branch amplitudes stay under cap. */
std::optional<double> recommend_r(const WeylPoint& p, double h, double cap);

PhysicalControls to_physical(const NormalizedControls& c, double g_mhz);

/** Gate-name lookup table; r selects the variant used in the table. */
struct NamedGate {
  std::string name;
  WeylPoint point;
  double r;
};

const std::vector<NamedGate>& named_gates();
/** Case-insensitive; throws DomainError for unknown names. */
const NamedGate& find_named_gate(const std::string& name);

}  // namespace ashn
