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
 * Small statevector simulation plus W and Dicke state preparation.
 *
 * Qubit 0 is the most significant bit of the amplitude index.
 */

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "ashn/mat_core.hpp"

namespace ashn {

inline constexpr int kMaxQubits = 14;

struct Statevector {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  /** |0...0>. */
  static Statevector zero(int n);
  /** Throws DomainError unless normalized within 1e-12. */
  static Statevector from(int n, const Eigen::VectorXcd& amps);
};

struct CircuitOp {
  std::vector<int> targets;
  Eigen::MatrixXcd matrix;
  std::string label;
};

struct CircuitSpec {
  int n_qubits = 0;
  std::vector<CircuitOp> ops;

  /** Validates target ranges and unitarity. */
  void add(std::vector<int> targets, const Eigen::MatrixXcd& m,
           std::string label);
  std::size_t two_qubit_count() const;
};

/**
 * Identity on |00>, |11>; on {|10>, |01>}:
 * |10> -> sqrt(1-p)|10> + e^{i phi} sqrt(p)|01>,
 * |01> -> -e^{-i phi} sqrt(p)|10> + sqrt(1-p)|01>.
 */
struct PartialSwapGate {
  double p = 0;
  double phi = 0;
  Matrix4 matrix() const;
};

/**
 * X on qubit 0, then n-1 partial swaps along the chain (k-1, k). Gate k
 * keeps 1/(n-k+1) of the remaining weight on qubit k-1, so every qubit
 * ends with weight 1/n. phases[k-1] rides on gate k.
 */
CircuitSpec build_w_circuit(int n, const std::vector<double>& phases = {});

/** The state build_w_circuit prepares, written out directly. */
Statevector w_target(int n, const std::vector<double>& phases = {});

Statevector dicke_target(int n, int k);

Statevector simulate_circuit(const CircuitSpec& c, const Statevector& initial);

/** |<target|psi>|^2. */
double state_fidelity(const Statevector& psi, const Statevector& target);
/** <target|rho|target>; rho validated as a density matrix. */
double state_fidelity(const Eigen::MatrixXcd& rho, const Statevector& target);
/** (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 by eigendecomposition. */
double uhlmann_fidelity(const Eigen::MatrixXcd& rho,
                        const Eigen::MatrixXcd& sigma);

Eigen::MatrixXcd density(const Statevector& psi);

}  // namespace ashn
