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

#include "ashn/evolve_verify.hpp"

#include <algorithm>
#include <cmath>

namespace ashn {

DriveSpec drive_from(const NormalizedControls& c) {
  DriveSpec d;
  d.omega1 = c.omega1;
  d.omega2 = c.omega2;
  d.delta = c.delta;
  d.tau = c.tau;
  return d;
}

Hermitian4 build_hamiltonian(const DriveSpec& d) {
  using namespace pauli;
  const Matrix2& i2 = I();
  Matrix4 h = 0.5 * d.delta * (kron(Z(), i2) + kron(i2, Z())) +
              0.5 * (kron(X(), X()) + kron(Y(), Y())) +
              0.5 * d.omega1 *
                  (std::cos(d.phi1) * kron(X(), i2) +
                   std::sin(d.phi1) * kron(Y(), i2)) +
              0.5 * d.omega2 *
                  (std::cos(d.phi2) * kron(i2, X()) +
                   std::sin(d.phi2) * kron(i2, Y()));
  return Hermitian4(h);
}

Unitary4 evolve(const DriveSpec& d) {
  if (!(d.tau > 0) || !std::isfinite(d.tau))
    throw DomainError("evolve: tau must be positive");
  return expm_generator(build_hamiltonian(d), d.tau);
}

VerificationReport verify_unitary(const Unitary4& u, const WeylPoint& target) {
  VerificationReport rep;
  rep.target = target;
  rep.achieved = kak_decompose(u).point;
  rep.distance = weyl_distance(rep.achieved, canonicalize(target).point);
  rep.passed = rep.distance < kVerifyTol;
  if (rep.passed) {
    try {
      LocalAlignment a = align_locals(weyl_unitary(target), u);
      rep.reconstruction_residual = a.residual;
      rep.compensators = a;
    } catch (const DomainError&) {
      rep.passed = false;
    }
  }
  return rep;
}

VerificationReport verify_controls(const NormalizedControls& c,
                                   const WeylPoint& target) {
  return verify_unitary(evolve(drive_from(c)), target);
}

std::vector<double> default_phase_grid() {
  std::vector<double> phis(64);
  for (int k = 0; k < 64; ++k) phis[k] = -kPi + 2 * kPi * k / 63.0;
  return phis;
}

namespace {

DriveSpec b_gate_drive() {
  SynthesisRequest req{{kPi / 4, kPi / 8, 0}, 0, 0, std::nullopt};
  return drive_from(synth_nd(req));
}

}  // namespace

std::vector<std::pair<double, double>> drive_phase_scan(
    double omega2, const std::vector<double>& phis) {
  DriveSpec d = b_gate_drive();
  std::vector<std::pair<double, double>> out;
  out.reserve(phis.size());
  for (double phi : phis) {
    d.omega2 = omega2;
    d.phi2 = phi;
    out.emplace_back(phi, kak_decompose(evolve(d)).point.a);
  }
  return out;
}

double class_infidelity(const WeylPoint& p, const WeylPoint& q) {
  return 1.0 - gate_fidelity(weyl_unitary(p), weyl_unitary(q));
}

double crosstalk_error(double ratio, double detuning) {
  if (!(ratio >= 0) || !std::isfinite(detuning))
    throw DomainError("crosstalk_error: ratio must be >= 0");
  const DriveSpec base = b_gate_drive();
  const WeylPoint target{kPi / 4, kPi / 8, 0};
  if (ratio == 0) return class_infidelity(kak_decompose(evolve(base)).point, target);

  const Matrix4 h0 = build_hamiltonian(base).matrix();
  const double amp = 0.5 * ratio * base.omega1;
  const Matrix4 hx = kron(pauli::I(), pauli::X());
  const Matrix4 hy = kron(pauli::I(), pauli::Y());
  auto ham = [&](double t) {
    return Matrix4(h0 + amp * (std::cos(detuning * t) * hx +
                               std::sin(detuning * t) * hy));
  };
  // Fourth-order Magnus steps (two-point Gauss nodes).
  const int steps =
      std::max(400, static_cast<int>(std::ceil(std::abs(detuning) * base.tau * 40)));
  const double dt = base.tau / steps;
  const double c1 = 0.5 - std::sqrt(3.0) / 6, c2 = 0.5 + std::sqrt(3.0) / 6;
  Matrix4 u = Matrix4::Identity();
  for (int s = 0; s < steps; ++s) {
    const double t0 = s * dt;
    Matrix4 a1 = ham(t0 + c1 * dt), a2 = ham(t0 + c2 * dt);
    // step = exp(-i G), G = dt/2 (H1 + H2) - i sqrt(3)/12 dt^2 [H2, H1]
    Matrix4 gen = 0.5 * dt * (a1 + a2) -
                  kI * (std::sqrt(3.0) / 12) * dt * dt * (a2 * a1 - a1 * a2);
    Matrix4 herm = 0.5 * (gen + gen.adjoint());
    u = expm_generator(Hermitian4(herm), 1.0).matrix() * u;
  }
  return class_infidelity(kak_decompose(Unitary4::trusted(u)).point, target);
}

}  // namespace ashn
