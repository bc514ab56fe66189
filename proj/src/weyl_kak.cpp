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

#include "ashn/weyl_kak.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>

namespace ashn {

namespace {

constexpr double kHalfPi = kPi / 2;
constexpr double kQuarterPi = kPi / 4;

const Matrix4& magic() {
  static const Matrix4 m = [] {
    Matrix4 b;
    b << 1, 0, 0, kI, 0, kI, 1, 0, 0, kI, -1, 0, 1, 0, 0, -kI;
    return Matrix4(b / std::sqrt(2.0));
  }();
  return m;
}

/** Diagonals of XX, YY, ZZ in the magic basis (each entry is +-1). */
const std::array<Eigen::Vector4d, 3>& magic_signs() {
  static const std::array<Eigen::Vector4d, 3> s = [] {
    std::array<Eigen::Vector4d, 3> out;
    const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
    for (int i = 0; i < 3; ++i) {
      const Matrix2& p = pauli::of(axes[i]);
      Matrix4 d = magic().adjoint() * kron(p, p) * magic();
      for (int k = 0; k < 4; ++k) out[i](k) = std::round(d(k, k).real());
    }
    return out;
  }();
  return s;
}

/** Split l = phase * (a x b) with det a = det b = 1. */
void factor_local(const Matrix4& l, Matrix2& a, Matrix2& b, Complex& phase) {
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double n = l.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) best = n, bi = i, bj = j;
    }
  Matrix2 blk = l.block<2, 2>(2 * bi, 2 * bj);
  b = blk / std::sqrt(blk.determinant());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      a(i, j) = (b.adjoint() * l.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
  a /= std::sqrt(a.determinant());
  phase = (kron(a, b).adjoint() * l).trace() / 4.0;
  phase /= std::abs(phase);
}

/** u = phase * (l1 x l2) * W(v) * (r1 x r2) under coordinate moves. */
struct Tracked {
  Matrix2 l1, l2, r1, r2;
  Complex phase;
  std::array<double, 3> v;

  static const Matrix2& pauli_of(int i) {
    static const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
    return pauli::of(axes[i]);
  }

  // W(v) = W(v - k pi/2 e_i) (i P P)^k
  void shift(int i, int k) {
    if (k == 0) return;
    v[i] -= k * kHalfPi;
    if (k % 2 != 0) {
      r1 = pauli_of(i) * r1;
      r2 = pauli_of(i) * r2;
    }
    static const Complex powers[4] = {1.0, kI, -1.0, -kI};
    phase *= powers[((k % 4) + 4) % 4];
  }

  // Negate coordinates i and j: W(v) = -(iQ x I) W(v') (iQ x I).
  void flip(int i, int j) {
    int q = 3 - i - j;
    Matrix2 iq = kI * pauli_of(q);
    v[i] = -v[i];
    v[j] = -v[j];
    l1 = l1 * iq;
    r1 = iq * r1;
    phase = -phase;
  }

  // Swap coordinates i and j: W(v) = (V x V)^dag W(v') (V x V).
  void swap(int i, int j) {
    int k = 3 - i - j;
    Matrix2 rot = exp_pauli(k == 0 ? Axis::X : k == 1 ? Axis::Y : Axis::Z,
                            kQuarterPi)
                      .matrix();
    std::swap(v[i], v[j]);
    l1 = l1 * rot.adjoint();
    l2 = l2 * rot.adjoint();
    r1 = rot * r1;
    r2 = rot * r2;
  }

  void canonicalize() {
    for (int i = 0; i < 3; ++i)
      shift(i, static_cast<int>(std::lround(v[i] / kHalfPi)));
    if (std::abs(v[1]) > std::abs(v[0])) swap(0, 1);
    if (std::abs(v[2]) > std::abs(v[0])) swap(0, 2);
    if (std::abs(v[2]) > std::abs(v[1])) swap(1, 2);
    if (v[0] < 0 && v[1] < 0) {
      flip(0, 1);
    } else if (v[0] < 0) {
      flip(0, 2);
    }
    if (v[1] < 0) flip(1, 2);
    if (v[0] > kQuarterPi - kChamberTol && v[2] < 0) {
      shift(0, 1);
      flip(0, 2);
    }
  }
};

KakFactors decompose_once(const Matrix4& u) {
  const Complex det = u.determinant();
  const Complex root = std::pow(det, 0.25);
  const Matrix4 su = u / root;
  const Matrix4 up = magic().adjoint() * su * magic();
  const Matrix4 m = up.transpose() * up;

  // m = O D O^T with O real orthogonal; Re(m), Im(m) commute, so a generic
  // real combination of them shares the eigenbasis.
  static const double weights[][2] = {
      {0.8090169943749475, 0.5877852522924731}, {0.3, 0.95393920141694566},
      {-0.6, 0.8}, {0.99, -0.14106735979665885}, {0.12, 0.99277389167}};
  Eigen::Matrix4d o = Eigen::Matrix4d::Identity();
  Eigen::Vector4cd d2;
  bool diagonal = false;
  for (const auto& w : weights) {
    Eigen::Matrix4d mix = w[0] * m.real() + w[1] * m.imag();
    mix = 0.5 * (mix + mix.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(mix);
    o = es.eigenvectors();
    Matrix4 dm = o.transpose().cast<Complex>() * m * o.cast<Complex>();
    d2 = dm.diagonal();
    Matrix4 off = dm;
    off.diagonal().setZero();
    if (max_abs(off) < 1e-10) {
      diagonal = true;
      break;
    }
  }
  if (!diagonal) throw SolverError("magic-basis diagonalization failed", 1.0);
  if (o.determinant() < 0) o.col(0) *= -1;

  Eigen::Vector4d theta;
  for (int k = 0; k < 4; ++k) theta(k) = std::arg(d2(k)) / 2;
  // det(m) = 1 forces sum(theta) = 0 mod pi; pick the branch with det D = 1.
  double total = theta.sum();
  double turns = std::round(total / kPi);
  if (static_cast<long>(turns) % 2 != 0) theta(0) -= kPi;

  Eigen::Vector4cd dinv;
  for (int k = 0; k < 4; ++k) dinv(k) = std::exp(-kI * theta(k));
  const Matrix4 k1m = up * o.cast<Complex>() * dinv.asDiagonal();
  const Matrix4 left = magic() * k1m * magic().adjoint();
  const Matrix4 right = magic() * o.transpose().cast<Complex>() * magic().adjoint();

  const auto& s = magic_signs();
  Tracked t;
  t.v = {theta.dot(s[0]) / 4, theta.dot(s[1]) / 4, theta.dot(s[2]) / 4};
  Complex pl, pr;
  factor_local(left, t.l1, t.l2, pl);
  factor_local(right, t.r1, t.r2, pr);
  t.phase = root * std::exp(kI * theta.sum() / 4.0) * pl * pr;
  t.canonicalize();

  KakFactors k{Unitary2::trusted(t.l1), Unitary2::trusted(t.l2),
               Unitary2::trusted(t.r1), Unitary2::trusted(t.r2),
               WeylPoint{t.v[0], t.v[1], t.v[2]}, t.phase};
  return k;
}

}  // namespace

bool is_canonical(const WeylPoint& p, double tol) {
  if (!(std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.c)))
    return false;
  if (p.a > kQuarterPi + tol || p.b > p.a + tol || std::abs(p.c) > p.b + tol)
    return false;
  if (p.a >= kQuarterPi - tol && p.c < -tol) return false;
  return true;
}

Unitary4 KakFactors::reconstruct() const {
  return phase * (kron(k1, k2) * weyl_unitary(point) * kron(k3, k4));
}

Unitary4 weyl_unitary(const WeylPoint& p) {
  const auto& s = magic_signs();
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k)
    d(k) = std::exp(kI * (p.a * s[0](k) + p.b * s[1](k) + p.c * s[2](k)));
  return Unitary4::trusted(magic() * d.asDiagonal() * magic().adjoint());
}

namespace {

// Moves each factor's determinant into the global phase.
KakFactors with_special_factors(KakFactors k) {
  for (Unitary2* f : {&k.k1, &k.k2, &k.k3, &k.k4}) {
    const Unitary2 s = f->special();
    // f = r s with |r| = 1.
    k.phase *= (s.matrix().adjoint() * f->matrix()).trace() / 2.0;
    *f = s;
  }
  return k;
}

}  // namespace

KakFactors kak_decompose(const Unitary4& u) {
  if (!u.matrix().allFinite() || unitarity_defect(u.matrix()) > kUnitaryTol)
    throw DomainError("kak_decompose: input is not unitary within 1e-12");
  KakFactors k = decompose_once(u.matrix());
  if (max_abs(k.reconstruct().matrix() - u.matrix()) < 1e-10)
    return with_special_factors(k);

  // Fallback: dress with fixed random locals and undo them afterwards.
  Rng rng(0x5eed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Unitary2 g1 = haar_unitary2(rng).special(), g2 = haar_unitary2(rng).special();
    Unitary2 g3 = haar_unitary2(rng).special(), g4 = haar_unitary2(rng).special();
    Matrix4 dressed = kron(g1, g2).matrix() * u.matrix() * kron(g3, g4).matrix();
    KakFactors kd = decompose_once(dressed);
    kd.k1 = g1.adjoint() * kd.k1;
    kd.k2 = g2.adjoint() * kd.k2;
    kd.k3 = kd.k3 * g3.adjoint();
    kd.k4 = kd.k4 * g4.adjoint();
    if (max_abs(kd.reconstruct().matrix() - u.matrix()) < 1e-10)
      return with_special_factors(kd);
  }
  throw SolverError("kak_decompose: reconstruction check failed", 1.0);
}

CanonicalForm canonicalize(const WeylPoint& p) {
  const double in[3] = {p.a, p.b, p.c};
  for (double x : in)
    if (!std::isfinite(x)) throw DomainError("canonicalize: non-finite point");
  double options[3][3];
  for (int i = 0; i < 3; ++i) {
    double r = in[i] - kHalfPi * std::round(in[i] / kHalfPi);
    options[i][0] = r + kHalfPi;
    options[i][1] = r;
    options[i][2] = r - kHalfPi;
  }
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static const int signs[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};

  auto lex_greater = [](const WeylPoint& x, const WeylPoint& y) {
    if (x.a != y.a) return x.a > y.a;
    if (x.b != y.b) return x.b > y.b;
    return x.c > y.c;
  };
  bool found = false;
  WeylPoint best;
  for (int s0 = 0; s0 < 3; ++s0)
    for (int s1 = 0; s1 < 3; ++s1)
      for (int s2 = 0; s2 < 3; ++s2) {
        const double v[3] = {options[0][s0], options[1][s1], options[2][s2]};
        for (const auto& pm : perms)
          for (const auto& sg : signs) {
            WeylPoint q{sg[0] * v[pm[0]], sg[1] * v[pm[1]], sg[2] * v[pm[2]]};
            if (!is_canonical(q)) continue;
            if (!found || lex_greater(q, best)) best = q, found = true;
          }
      }
  CanonicalForm out;
  out.point = best;
  const double c_in = options[2][1];
  out.mirrored = best.a >= kQuarterPi - kChamberTol &&
                 std::abs(c_in) > kChamberTol && c_in < 0 && best.c > 0;
  return out;
}

double weyl_distance(const WeylPoint& p, const WeylPoint& q) {
  if (!is_canonical(p) || !is_canonical(q))
    throw DomainError("weyl_distance: inputs must be canonical");
  double da = p.a - q.a, db = p.b - q.b, dc = std::abs(p.c) - std::abs(q.c);
  return std::sqrt(da * da + db * db + dc * dc);
}

namespace {

LocalAlignment align_once(const Unitary4& u, const Unitary4& v) {
  const KakFactors ku = kak_decompose(u);
  const KakFactors kv = kak_decompose(v);
  if (weyl_distance(ku.point, kv.point) > kEquivalenceTol)
    throw DomainError("align_locals: unitaries are not locally equivalent");

  // Direct match W(pu) = W(pv), and the a = pi/4 face match
  // W(pi/4,b,c) = -(iY x I) W(pi/4,b,-c) (iY x I) (iXX).
  struct Middle {
    Matrix2 ml1, ml2, mr1, mr2;
    Complex phase;
  };
  std::vector<Middle> middles;
  middles.push_back({pauli::I(), pauli::I(), pauli::I(), pauli::I(), 1.0});
  if (std::abs(ku.point.a - kQuarterPi) < 1e-6) {
    Matrix2 iy = kI * pauli::Y();
    middles.push_back({iy, pauli::I(), iy * pauli::X(), pauli::X(), -kI});
  }

  LocalAlignment best;
  best.residual = INFINITY;
  for (const Middle& mid : middles) {
    // u = pu A W(pu) A' and W(pu) ~ mid.l W(pv) mid.r, W(pv) = B^dag v B'^dag / pv
    Matrix2 l1 = ku.k1.matrix() * mid.ml1 * kv.k1.matrix().adjoint();
    Matrix2 l2 = ku.k2.matrix() * mid.ml2 * kv.k2.matrix().adjoint();
    Matrix2 r1 = kv.k3.matrix().adjoint() * mid.mr1 * ku.k3.matrix();
    Matrix2 r2 = kv.k4.matrix().adjoint() * mid.mr2 * ku.k4.matrix();
    Matrix4 built = kron(l1, l2) * v.matrix() * kron(r1, r2);
    PhaseAlignment pa = phase_align(u.matrix(), built);
    if (pa.residual < best.residual) {
      best = {Unitary2::trusted(l1), Unitary2::trusted(l2),
              Unitary2::trusted(r1), Unitary2::trusted(r2), pa.phase,
              pa.residual};
    }
  }
  return best;
}

}  // namespace

LocalAlignment align_locals(const Unitary4& u, const Unitary4& v,
                            std::uint64_t seed) {
  LocalAlignment a = align_once(u, v);
  if (a.residual < 1e-9) return a;
  Rng rng(seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Unitary2 g1 = haar_unitary2(rng).special(), g2 = haar_unitary2(rng).special();
    Unitary2 g3 = haar_unitary2(rng).special(), g4 = haar_unitary2(rng).special();
    Unitary4 dressed = kron(g1, g2) * v * kron(g3, g4);
    LocalAlignment d = align_once(u, dressed);
    d.l1 = d.l1 * g1;
    d.l2 = d.l2 * g2;
    d.r1 = g3 * d.r1;
    d.r2 = g4 * d.r2;
    if (d.residual < 1e-9) return d;
    if (d.residual < a.residual) a = d;
  }
  throw DomainError("align_locals: local matching failed (residual " +
                    std::to_string(a.residual) + ")");
}

}  // namespace ashn
