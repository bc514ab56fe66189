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
 * Lumped capacitance network of a transmon-coupler-transmon block reduced
 * to transmon parameters, plus the dispersive effective coupling.
 *
 * Plates: 1, 2 form qubit 1; 3, 4 the coupler; 5, 6 qubit 2; 0 is ground.
 * Energies are in frequency units (E/h).
 */

#include <Eigen/Dense>
#include <array>
#include <map>
#include <string>

namespace ashn {

namespace constants {
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kPlanck = 6.62607015e-34;             // J s
}  // namespace constants

/** Element order used by the arrays below. */
enum class Element { Q1 = 0, Coupler = 1, Q2 = 2 };

struct CapacitanceNetwork {
  /** Keys "Cij" with 0 <= i < j <= 6; absent pairs are zero. fF. */
  std::map<std::string, double> mutuals_ff;
  /** Josephson energies for q1, coupler, q2. GHz. */
  std::array<double, 3> ej_ghz{0, 0, 0};
};

/** The mutuals from the reference floating-transmon design. */
CapacitanceNetwork reference_network();

struct DeviceDerived {
  Eigen::Matrix<double, 6, 6> maxwell;
  /** S^T M S in (sum, difference) coordinates per element. */
  Eigen::Matrix<double, 6, 6> transformed;
  std::array<double, 3> ec_mhz{};
  /** e^2 Cinv between difference modes: q1-c, q2-c, q1-q2. MHz. */
  double e_q1c_mhz = 0, e_q2c_mhz = 0, e_q1q2_mhz = 0;
  std::array<double, 3> omega_ghz{};
  std::array<double, 3> alpha_mhz{};
  double g_q1c_mhz = 0, g_q2c_mhz = 0, g_q1q2_mhz = 0;
};

Eigen::Matrix<double, 6, 6> maxwell_matrix(const CapacitanceNetwork& n);

/** Throws DomainError for bad keys, non-positive values or singular M. */
DeviceDerived derive(const CapacitanceNetwork& n);

/** E_J giving transition frequency omega for charging energy E_C. GHz. */
double ej_for_frequency(double ec_ghz, double omega_ghz);

/** Sets the Josephson energies so the elements sit at the given GHz. */
CapacitanceNetwork tune_to_frequencies(CapacitanceNetwork n,
                                       const std::array<double, 3>& omega_ghz);

/** g12 + g1c g2c / 2 (1/(w1 - wc) + 1/(w2 - wc)); couplings MHz, w GHz. */
double effective_coupling(double g12, double g1c, double g2c, double w1,
                          double w2, double wc);

struct CouplingParams {
  double g12_mhz = 5, g1c_mhz = 90, g2c_mhz = 90;
  double w1_ghz = 4.1, w2_ghz = 4.1;
  /** Upper end of the coupler search range. */
  double wc_max_ghz = 20;
};

/** Root in wc above both qubits, by bisection. */
double zero_coupling_frequency(const CouplingParams& p);

}  // namespace ashn
