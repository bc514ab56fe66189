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

#include <optional>
#include <utility>
#include <vector>

#include "ashn/ashn_synth.hpp"
#include "ashn/weyl_kak.hpp"

namespace ashn {

/** Square-pulse drive (g = 1 units). */
struct DriveSpec {
  double omega1 = 0, omega2 = 0;
  double delta = 0;
  double phi1 = 0, phi2 = 0;
  double tau = 0;
};

DriveSpec drive_from(const NormalizedControls& c);

/**
 * H = delta/2 (ZI + IZ) + (XX + YY)/2
 *     + omega1/2 (cos phi1 XI + sin phi1 YI)
 *     + omega2/2 (cos phi2 IX + sin phi2 IY)
 */
Hermitian4 build_hamiltonian(const DriveSpec& d);

/** exp(-i H tau); throws DomainError unless tau > 0. */
Unitary4 evolve(const DriveSpec& d);

inline constexpr double kVerifyTol = 1e-8;

struct VerificationReport {
  WeylPoint target;
  WeylPoint achieved;
  double distance = 0;
  bool passed = false;
  /** phase (V1 x V2) U (V3 x V4) = weyl_unitary(target); set when passed. */
  std::optional<LocalAlignment> compensators;
  double reconstruction_residual = INFINITY;
};

/** target need not be canonical; the distance uses its canonical form. */
VerificationReport verify_controls(const NormalizedControls& c,
                                   const WeylPoint& target);
VerificationReport verify_unitary(const Unitary4& u, const WeylPoint& target);

/** 64 points on [-pi, pi], endpoints included. */
std::vector<double> default_phase_grid();

/** Canonical a-coordinate of the B-gate drive plus a phased second drive. */
std::vector<std::pair<double, double>> drive_phase_scan(
    double omega2, const std::vector<double>& phis);

/**
 * Infidelity of the B-gate drive with a spurious drive on qubit 2
 * (amplitude ratio * Omega1, detuned by `detuning` in g units), after
 * re-fitting the local compensators to its interaction class.
 */
double crosstalk_error(double ratio, double detuning);

/** 1 - |Tr(W(q)^dag W(p))|/4 for canonical points, i.e. after local dressing. */
double class_infidelity(const WeylPoint& p, const WeylPoint& q);

}  // namespace ashn
