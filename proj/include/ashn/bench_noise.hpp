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
 * Simulated benchmarks: cross-entropy benchmarking, detuning error of
 * four-pulse single-qubit gates, dephasing error maps of B-composed gates
 * and decoherence-time bounds.
 *
 * Detuning units: a quoted detuning d "in MHz" enters the Hamiltonian as
 * the coefficient d (rad/us) of the Z term, H = ... + d1 ZI + d2 IZ. In
 * g = 1 units that is d / (2 pi g_mhz). During a pi/2 pulse of length
 * t_g the dimensionless pulse detuning is 2 t_g d (t_g in us).
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ashn/ashn_synth.hpp"
#include "ashn/bgate_compiler.hpp"
#include "ashn/pulse_program.hpp"

namespace ashn {

struct NoiseModel {
  /** Global depolarizing probability applied after every cycle. */
  double depolarizing_per_cycle = 0;
  /** Quasi-static detuning spreads (see file comment for units). */
  double dephasing_sigma1 = 0, dephasing_sigma2 = 0;
  /** Duration over which detuning acts in one XEB cycle. */
  double cycle_ns = 120;
};

/** Throws DomainError for out-of-range values. */
void validate(const NoiseModel& n);

struct XebConfig {
  std::vector<int> depths;
  int circuits_per_depth = 50;
  std::uint64_t seed = 0;
  Unitary4 two_qubit_gate;
  NoiseModel noise;
  /** 0 uses the exact output distribution; otherwise sample this many. */
  int shots = 0;
  /** Per single-qubit gate error to subtract from the cycle error. */
  double single_qubit_error = 0;
};

struct XebResult {
  std::vector<int> depths;
  std::vector<double> per_depth_fidelity;
  double fitted_amplitude = 0;
  double fitted_decay = 0;
  double fitted_error_per_cycle = 0;
  /** Cycle error minus 2 * single_qubit_error (linear convention). */
  double two_qubit_error = 0;
  double fit_residual = 0;
  bool fit_ok = false;
  std::string fit_message;
};

/** U(pi/2, n pi/4, -n pi/4), n = 1..8, U(t,p,l) in the standard U3 form. */
std::vector<Unitary2> xeb_gate_set();

/**
 * (S(inc, exp) - S(meas, exp)) / (S(inc, exp) - S(exp)), S the cross
 * entropy, inc uniform. Probabilities in the logs are floored at 1e-15.
 */
double xeb_fidelity(const std::array<double, 4>& measured,
                    const std::array<double, 4>& expected);

XebResult xeb_run(const XebConfig& cfg);

/** exp(-i/2 [pi/2 (cos p X + sin p Y) + pi/2 delta Z]). */
Unitary2 noisy_x90(double phase, double delta);

/** Product of the four pulses with every pulse detuned by delta. */
Unitary2 noisy_pmw4(const Pmw4Sequence& seq, double delta);

/** 1 - |Tr(S^dag U_delta)|/2 for S = S(alpha, 0, gamma). |delta| < 0.2. */
double pmw4_detuning_error(double alpha, double gamma, double delta);

/** (3 + 4 cos(alpha) cos(gamma) + cos(2 gamma)) delta^2 / 4. */
double pmw4_detuning_formula(double alpha, double gamma, double delta);

struct ErrorMapOptions {
  double g_mhz = 6.25;
  /** Single-qubit pi/2 pulse slot including buffer. */
  double pulse_ns = 20;
};

struct ErrorMapEntry {
  WeylPoint point;
  int b_count = 0;
  double mean_error = 0;
  double std_error = 0;
};

/** Paired comparison of the a = b = pi/4 line against all points. */
struct LineContrast {
  std::size_t line_points = 0;
  double line_mean = 0, chamber_mean = 0;
  double difference = 0, difference_std_error = 0;
  /** (chamber_mean - line_mean) / difference_std_error. */
  double significance = 0;
};

struct ErrorMapResult {
  std::vector<ErrorMapEntry> entries;
  int shots = 0;
  LineContrast contrast;
};

/**
 * Monte Carlo over quasi-static detunings: each shot draws (d1, d2),
 * shared by every point, and evaluates 1 - |Tr(U_ideal U_sim^dag)|/4 for
 * the B-composed program built from the drive-level B evolution, with the
 * detuning present in both B windows and in every pi/2 pulse.
 */
ErrorMapResult b_chamber_error_map(const std::vector<WeylPoint>& points,
                                   const NoiseModel& noise, int shots,
                                   std::uint64_t seed,
                                   const ErrorMapOptions& opt = {});

struct DecoherenceBounds {
  double t_low_us = 0, t_high_us = 0;
  /** Predicted error band tau/T_high .. tau/T_low. */
  std::pair<double, double> error_band(double tau_ns) const;
};

/** T_low = N pulse_ns, T_high = N cycle_ns, in us. */
DecoherenceBounds decoherence_bounds(double decay_gate_count, double pulse_ns,
                                     double cycle_ns);

struct DephasingOptions {
  /** Pure-dephasing time of each qubit. */
  double t_phi_us = 10;
  double g_mhz = 6.25;
  int slices = 48;
  int trajectories = 300;
  std::uint64_t seed = 0;
};

/**
 * Average gate infidelity d/(d+1) (1 - F_pro) of the square-pulse gate
 * under white-noise Z fluctuations on both qubits, estimated from
 * piecewise-constant noise trajectories: F_pro = E|Tr(U^dag V)|^2 / 16.
 */
double dephasing_gate_error(const NormalizedControls& c,
                            const DephasingOptions& opt);

/** T_phi (us) giving the requested error for the given controls. */
double calibrate_t_phi(const NormalizedControls& c, double target_error,
                       DephasingOptions opt);

}  // namespace ashn
