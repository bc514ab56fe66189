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
 * Dense 2x2 / 4x4 complex linear algebra.
 *
 * Basis convention: qubit 1 is the left Kronecker factor and the two-qubit
 * basis is ordered |00>, |01>, |10>, |11>. So "ZI" is kron(Z, I).
 */

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "ashn/errors.hpp"

namespace ashn {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Rng = std::mt19937_64;

inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

enum class Axis { X, Y, Z };

namespace pauli {
const Matrix2& I();
const Matrix2& X();
const Matrix2& Y();
const Matrix2& Z();
const Matrix2& of(Axis axis);
}  // namespace pauli

double max_abs(const Eigen::MatrixXcd& m);

/** Max-abs entry of m*m^dagger - I. */
double unitarity_defect(const Eigen::MatrixXcd& m);

class Unitary2 {
 public:
  Unitary2() : m_(Matrix2::Identity()) {}
  /** Throws DomainError unless m is unitary within kUnitaryTol. */
  explicit Unitary2(const Matrix2& m);
  /** Skip the unitarity check; for products of known unitaries. */
  static Unitary2 trusted(const Matrix2& m);

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }
  Complex det() const { return m_.determinant(); }
  Unitary2 adjoint() const { return trusted(m_.adjoint()); }
  /** Rescaled to determinant 1 (principal square root of det). */
  Unitary2 special() const;

  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
    return trusted(a.m_ * b.m_);
  }

 private:
  struct Unchecked {};
  Unitary2(const Matrix2& m, Unchecked) : m_(m) {}
  Matrix2 m_;
};

class Unitary4 {
 public:
  Unitary4() : m_(Matrix4::Identity()) {}
  explicit Unitary4(const Matrix4& m);
  static Unitary4 trusted(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }
  Complex det() const { return m_.determinant(); }
  Unitary4 adjoint() const { return trusted(m_.adjoint()); }

  friend Unitary4 operator*(const Unitary4& a, const Unitary4& b) {
    return trusted(a.m_ * b.m_);
  }
  friend Unitary4 operator*(Complex phase, const Unitary4& a) {
    return trusted(phase * a.m_);
  }

 private:
  struct Unchecked {};
  Unitary4(const Matrix4& m, Unchecked) : m_(m) {}
  Matrix4 m_;
};

/** Hermitian generator in g = 1 units. */
class Hermitian4 {
 public:
  Hermitian4() : m_(Matrix4::Zero()) {}
  /** Throws DomainError unless m = m^dagger within kUnitaryTol. */
  explicit Hermitian4(const Matrix4& m);
  const Matrix4& matrix() const { return m_; }

  friend Hermitian4 operator+(const Hermitian4& a, const Hermitian4& b) {
    Hermitian4 h;
    h.m_ = a.m_ + b.m_;
    return h;
  }

 private:
  Matrix4 m_;
};

Matrix4 kron(const Matrix2& a, const Matrix2& b);
Unitary4 kron(const Unitary2& a, const Unitary2& b);

/** exp(i * angle * sigma_axis). */
Unitary2 exp_pauli(Axis axis, double angle);

/** exp(-i h t) via Hermitian eigendecomposition. */
Unitary4 expm_generator(const Hermitian4& h, double t);

/** |Tr(v u^dagger)| / 4. */
double gate_fidelity(const Unitary4& u, const Unitary4& v);
/** |Tr(v u^dagger)| / 2. */
double gate_fidelity(const Unitary2& u, const Unitary2& v);

struct PhaseAlignment {
  Complex phase;
  double residual;
};

/** Unit phase minimizing max|u - phase*v| and the attained minimum. */
PhaseAlignment phase_align(const Matrix4& u, const Matrix4& v);
PhaseAlignment phase_align(const Unitary4& u, const Unitary4& v);
PhaseAlignment phase_align(const Unitary2& u, const Unitary2& v);

/** Haar-random unitaries (QR of a complex Gaussian matrix). */
Unitary2 haar_unitary2(Rng& rng);
Unitary4 haar_unitary4(Rng& rng);

}  // namespace ashn
