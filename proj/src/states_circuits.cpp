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

#include "ashn/states_circuits.hpp"

#include <algorithm>
#include <cmath>

namespace ashn {

namespace {

constexpr double kDensityTol = 1e-10;

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits)
    throw DomainError("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                      "]");
}

void check_density(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw DomainError("density must be square");
  if (max_abs(rho - rho.adjoint()) > kDensityTol)
    throw DomainError("density must be Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > kDensityTol)
    throw DomainError("density must have unit trace");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  if (es.eigenvalues().minCoeff() < -kDensityTol)
    throw DomainError("density must be positive semidefinite");
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Statevector Statevector::zero(int n) {
  check_qubits(n);
  Statevector s;
  s.n_qubits = n;
  s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  s.amplitudes(0) = 1;
  return s;
}

Statevector Statevector::from(int n, const Eigen::VectorXcd& amps) {
  check_qubits(n);
  if (amps.size() != (Eigen::Index(1) << n))
    throw DomainError("statevector: expected 2^n amplitudes");
  if (std::abs(amps.norm() - 1) > 1e-12)
    throw DomainError("statevector: amplitudes must be normalized");
  return {n, amps};
}

void CircuitSpec::add(std::vector<int> targets, const Eigen::MatrixXcd& m,
                      std::string label) {
  if (targets.empty() || targets.size() > 2)
    throw DomainError("circuit op: one or two targets");
  for (int t : targets)
    if (t < 0 || t >= n_qubits) throw DomainError("circuit op: target range");
  if (targets.size() == 2 && targets[0] == targets[1])
    throw DomainError("circuit op: targets must differ");
  const Eigen::Index dim = Eigen::Index(1) << targets.size();
  if (m.rows() != dim || m.cols() != dim)
    throw DomainError("circuit op: matrix size must match targets");
  if (unitarity_defect(m) > kUnitaryTol)
    throw DomainError("circuit op: matrix must be unitary");
  ops.push_back({std::move(targets), m, std::move(label)});
}

std::size_t CircuitSpec::two_qubit_count() const {
  std::size_t n = 0;
  for (const auto& op : ops) n += op.targets.size() == 2;
  return n;
}

Matrix4 PartialSwapGate::matrix() const {
  if (!(p >= 0 && p <= 1)) throw DomainError("partial swap: p in [0, 1]");
  const double keep = std::sqrt(1 - p), move = std::sqrt(p);
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1;
  m(3, 3) = 1;
  m(2, 2) = keep;
  m(1, 2) = std::polar(move, phi);
  m(2, 1) = -std::polar(move, -phi);
  m(1, 1) = keep;
  return m;
}

CircuitSpec build_w_circuit(int n, const std::vector<double>& phases) {
  if (n < 2) throw DomainError("build_w_circuit: n must be >= 2");
  check_qubits(n);
  if (!phases.empty() && phases.size() != static_cast<std::size_t>(n - 1))
    throw DomainError("build_w_circuit: expected n-1 phases");
  CircuitSpec c;
  c.n_qubits = n;
  c.add({0}, pauli::X(), "x");
  for (int k = 1; k < n; ++k) {
    PartialSwapGate g;
    g.p = 1.0 - 1.0 / (n - k + 1);
    g.phi = phases.empty() ? 0.0 : phases[k - 1];
    c.add({k - 1, k}, g.matrix(), "pswap");
  }
  return c;
}

Statevector w_target(int n, const std::vector<double>& phases) {
  check_qubits(n);
  if (!phases.empty() && phases.size() != static_cast<std::size_t>(n - 1))
    throw DomainError("w_target: expected n-1 phases");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  double acc = 0;
  for (int j = 0; j < n; ++j) {
    if (j > 0 && !phases.empty()) acc += phases[j - 1];
    a(Eigen::Index(1) << (n - 1 - j)) = std::polar(1.0 / std::sqrt(n), acc);
  }
  return {n, a};
}

Statevector dicke_target(int n, int k) {
  check_qubits(n);
  if (k < 0 || k > n) throw DomainError("dicke_target: need 0 <= k <= n");
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (__builtin_popcountll(static_cast<unsigned long long>(i)) == k) ++count;
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));
  for (Eigen::Index i = 0; i < dim; ++i)
    if (__builtin_popcountll(static_cast<unsigned long long>(i)) == k) a(i) = amp;
  return {n, a};
}

Statevector simulate_circuit(const CircuitSpec& c, const Statevector& initial) {
  if (c.n_qubits != initial.n_qubits ||
      initial.amplitudes.size() != (Eigen::Index(1) << c.n_qubits))
    throw DomainError("simulate_circuit: dimension mismatch");
  const int n = c.n_qubits;
  Eigen::VectorXcd psi = initial.amplitudes;
  const Eigen::Index dim = psi.size();
  for (const auto& op : c.ops) {
    if (op.targets.size() == 1) {
      const Eigen::Index bit = Eigen::Index(1) << (n - 1 - op.targets[0]);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const Complex a0 = psi(i), a1 = psi(i | bit);
        psi(i) = op.matrix(0, 0) * a0 + op.matrix(0, 1) * a1;
        psi(i | bit) = op.matrix(1, 0) * a0 + op.matrix(1, 1) * a1;
      }
    } else {
      const Eigen::Index b0 = Eigen::Index(1) << (n - 1 - op.targets[0]);
      const Eigen::Index b1 = Eigen::Index(1) << (n - 1 - op.targets[1]);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & b0) || (i & b1)) continue;
        const Eigen::Index idx[4] = {i, i | b1, i | b0, i | b0 | b1};
        Complex in[4], out[4];
        for (int r = 0; r < 4; ++r) in[r] = psi(idx[r]);
        for (int r = 0; r < 4; ++r) {
          out[r] = 0;
          for (int s = 0; s < 4; ++s) out[r] += op.matrix(r, s) * in[s];
        }
        for (int r = 0; r < 4; ++r) psi(idx[r]) = out[r];
      }
    }
  }
  return {n, psi};
}

double state_fidelity(const Statevector& psi, const Statevector& target) {
  if (psi.amplitudes.size() != target.amplitudes.size())
    throw DomainError("state_fidelity: dimension mismatch");
  return std::norm(target.amplitudes.dot(psi.amplitudes));
}

double state_fidelity(const Eigen::MatrixXcd& rho, const Statevector& target) {
  check_density(rho);
  if (rho.rows() != target.amplitudes.size())
    throw DomainError("state_fidelity: dimension mismatch");
  const Complex f =
      target.amplitudes.dot(rho * target.amplitudes);
  return std::clamp(f.real(), 0.0, 1.0);
}

double uhlmann_fidelity(const Eigen::MatrixXcd& rho,
                        const Eigen::MatrixXcd& sigma) {
  check_density(rho);
  check_density(sigma);
  if (rho.rows() != sigma.rows())
    throw DomainError("uhlmann_fidelity: dimension mismatch");
  const Eigen::MatrixXcd sr = psd_sqrt(rho);
  Eigen::MatrixXcd inner = sr * sigma * sr;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner);
  const double t = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(t * t, 0.0, 1.0);
}

Eigen::MatrixXcd density(const Statevector& psi) {
  return psi.amplitudes * psi.amplitudes.adjoint();
}

}  // namespace ashn
