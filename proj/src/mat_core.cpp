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

#include "ashn/mat_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace ashn {

namespace pauli {

const Matrix2& I() {
  static const Matrix2 m = Matrix2::Identity();
  return m;
}
const Matrix2& X() {
  static const Matrix2 m = (Matrix2() << 0, 1, 1, 0).finished();
  return m;
}
const Matrix2& Y() {
  static const Matrix2 m = (Matrix2() << 0, -kI, kI, 0).finished();
  return m;
}
const Matrix2& Z() {
  static const Matrix2 m = (Matrix2() << 1, 0, 0, -1).finished();
  return m;
}
const Matrix2& of(Axis axis) {
  switch (axis) {
    case Axis::X:
      return X();
    case Axis::Y:
      return Y();
    default:
      return Z();
  }
}

}  // namespace pauli

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m * m.adjoint() -
                 Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
}

Unitary2::Unitary2(const Matrix2& m) : m_(m) {
  if (!m.allFinite() || unitarity_defect(m) > kUnitaryTol)
    throw DomainError("matrix is not unitary within 1e-12");
}

Unitary2 Unitary2::trusted(const Matrix2& m) { return Unitary2(m, Unchecked{}); }

Unitary2 Unitary2::special() const {
  return trusted(m_ / std::sqrt(m_.determinant()));
}

Unitary4::Unitary4(const Matrix4& m) : m_(m) {
  if (!m.allFinite() || unitarity_defect(m) > kUnitaryTol)
    throw DomainError("matrix is not unitary within 1e-12");
}

Unitary4 Unitary4::trusted(const Matrix4& m) { return Unitary4(m, Unchecked{}); }

Hermitian4::Hermitian4(const Matrix4& m) : m_(m) {
  if (!m.allFinite() || max_abs(m - m.adjoint()) > kUnitaryTol)
    throw DomainError("generator is not Hermitian within 1e-12");
  m_ = 0.5 * (m + m.adjoint());
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Unitary4 kron(const Unitary2& a, const Unitary2& b) {
  return Unitary4::trusted(kron(a.matrix(), b.matrix()));
}

Unitary2 exp_pauli(Axis axis, double angle) {
  return Unitary2::trusted(std::cos(angle) * pauli::I() +
                           kI * std::sin(angle) * pauli::of(axis));
}

Unitary4 expm_generator(const Hermitian4& h, double t) {
  if (!std::isfinite(t)) throw DomainError("evolution time must be finite");
  Eigen::SelfAdjointEigenSolver<Matrix4> es(h.matrix());
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k)
    phases(k) = std::exp(-kI * es.eigenvalues()(k) * t);
  const Matrix4& v = es.eigenvectors();
  return Unitary4::trusted(v * phases.asDiagonal() * v.adjoint());
}

double gate_fidelity(const Unitary4& u, const Unitary4& v) {
  return std::abs((v.matrix() * u.matrix().adjoint()).trace()) / 4.0;
}

double gate_fidelity(const Unitary2& u, const Unitary2& v) {
  return std::abs((v.matrix() * u.matrix().adjoint()).trace()) / 2.0;
}

namespace {

double phase_residual(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                      double angle) {
  return max_abs(u - std::polar(1.0, angle) * v);
}

PhaseAlignment align_dense(const Eigen::MatrixXcd& u,
                           const Eigen::MatrixXcd& v) {
  // Coarse sweep plus the least-squares phase, then golden-section refine.
  std::vector<double> seeds;
  const Complex overlap = (v.adjoint() * u).trace();
  if (std::abs(overlap) > 1e-14) seeds.push_back(std::arg(overlap));
  constexpr int kSweep = 256;
  const double step = 2 * kPi / kSweep;
  for (int k = 0; k < kSweep; ++k) seeds.push_back(-kPi + k * step);

  double best_angle = 0, best = INFINITY;
  for (double s : seeds) {
    double r = phase_residual(u, v, s);
    if (r < best) best = r, best_angle = s;
  }
  const double golden = (std::sqrt(5.0) - 1) / 2;
  double lo = best_angle - step, hi = best_angle + step;
  double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
  double f1 = phase_residual(u, v, x1), f2 = phase_residual(u, v, x2);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = phase_residual(u, v, x1);
    } else {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = phase_residual(u, v, x2);
    }
  }
  for (double s : {x1, x2}) {
    double r = phase_residual(u, v, s);
    if (r < best) best = r, best_angle = s;
  }
  return {std::polar(1.0, best_angle), best};
}

}  // namespace

PhaseAlignment phase_align(const Matrix4& u, const Matrix4& v) {
  return align_dense(u, v);
}
PhaseAlignment phase_align(const Unitary4& u, const Unitary4& v) {
  return align_dense(u.matrix(), v.matrix());
}
PhaseAlignment phase_align(const Unitary2& u, const Unitary2& v) {
  return align_dense(u.matrix(), v.matrix());
}

namespace {

Eigen::MatrixXcd haar(Rng& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    Complex d = r(k, k);
    q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1);
  }
  return q;
}

}  // namespace

Unitary2 haar_unitary2(Rng& rng) {
  return Unitary2::trusted(Matrix2(haar(rng, 2)));
}
Unitary4 haar_unitary4(Rng& rng) {
  return Unitary4::trusted(Matrix4(haar(rng, 4)));
}

}  // namespace ashn
