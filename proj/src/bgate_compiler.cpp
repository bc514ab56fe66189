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

#include "ashn/bgate_compiler.hpp"

#include <algorithm>
#include <cmath>

namespace ashn {

namespace {

constexpr double kClassTol = 1e-7;
constexpr double kProgramTol = 1e-9;
const WeylPoint kBPoint{kPi / 4, kPi / 8, 0};

MidLayerParams mid_params(double a, double b, double c) {
  // Cancellation-free forms of cos(beta1) = 1 - 4 sin^2 b cos^2 c and
  // sin^2(beta2) = cos2b cos2c / (1 - 2 sin^2 b cos^2 c), using
  // 1 - 2 sin^2 b cos^2 c = cos^2 c cos2b + sin^2 c and
  // cos^2(beta2) = 2 sin^2 c cos^2 b / (1 - 2 sin^2 b cos^2 c).
  MidLayerParams m;
  const double sb = std::sin(b), cb = std::cos(b);
  const double sc = std::sin(c), cc = std::cos(c);
  const double cos2b = std::max(0.0, std::cos(2 * b));
  const double cos2c = std::max(0.0, std::cos(2 * c));
  m.beta1 = 2 * std::atan2(std::sqrt(2.0) * std::abs(sb * cc),
                           std::sqrt(cc * cc * cos2b + sc * sc));
  const double sin_part = std::sqrt(cos2b * cos2c);
  const double cos_part = std::sqrt(2.0) * std::abs(sc) * cb;
  if (sin_part < 1e-7 && cos_part < 1e-7) {
    // 0/0 at b = pi/4, c = 0; along c = 0 the ratio is identically 1.
    m.beta2 = kPi / 2;
    m.limit_branch = true;
  } else {
    m.beta2 = std::atan2(sin_part, cos_part);
  }
  m.s1_angle = c >= 0 ? a : kPi / 2 - a;
  return m;
}

}  // namespace

Unitary4 BGateProgram::reconstruct() const {
  Unitary4 core = kron(k3, k4);
  if (b_count >= 1) core = b_matrix() * core;
  if (b_count >= 2) core = b_matrix() * kron(s1, s2) * core;
  return phase * (kron(k1, k2) * core);
}

Unitary4 b_matrix() {
  static const Unitary4 b = weyl_unitary(kBPoint);
  return b;
}

MidLayerParams mid_layer(const WeylPoint& p) {
  if (!is_canonical(p)) throw DomainError("mid_layer: point is not canonical");
  return mid_params(p.a, p.b, p.c);
}

Unitary2 mid_s1(const MidLayerParams& m) { return exp_pauli(Axis::Y, m.s1_angle); }

Unitary2 mid_s2(const MidLayerParams& m) {
  Unitary2 z = exp_pauli(Axis::Z, m.beta2 / 2);
  return z * exp_pauli(Axis::Y, m.beta1 / 2) * z;
}

Unitary4 mid_unitary(const MidLayerParams& m) {
  return b_matrix() * kron(mid_s1(m), mid_s2(m)) * b_matrix();
}

BGateProgram compile_two_b(const Unitary4& target) {
  const KakFactors k = kak_decompose(target);
  const WeylPoint& p = k.point;
  BGateProgram prog;

  auto finish = [&](BGateProgram& out) {
    out.residual = max_abs(out.reconstruct().matrix() - target.matrix());
    if (out.residual > kProgramTol)
      throw CompileError("compile_two_b: reconstruction residual " +
                         std::to_string(out.residual));
    return out;
  };

  if (std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c)}) < 1e-9) {
    prog.b_count = 0;
    prog.k1 = k.k1;
    prog.k2 = k.k2;
    prog.k3 = k.k3;
    prog.k4 = k.k4;
    prog.phase = k.phase;
    return finish(prog);
  }
  if (weyl_distance(p, kBPoint) < 1e-9) {
    LocalAlignment al = align_locals(target, b_matrix());
    prog.b_count = 1;
    prog.k1 = al.l1;
    prog.k2 = al.l2;
    prog.k3 = al.r1;
    prog.k4 = al.r2;
    prog.phase = al.phase;
    return finish(prog);
  }

  std::vector<MidLayerParams> candidates{mid_params(p.a, p.b, p.c)};
  if (candidates[0].limit_branch)
    candidates.push_back(mid_params(p.a, p.b - 1e-8, p.c));
  std::string diag;
  for (const MidLayerParams& mid : candidates) {
    Unitary4 m = mid_unitary(mid);
    double dist = weyl_distance(kak_decompose(m).point, p);
    if (dist > kClassTol) {
      diag += " middle class off by " + std::to_string(dist) + ";";
      continue;
    }
    try {
      LocalAlignment al = align_locals(target, m);
      prog.b_count = 2;
      prog.mid = mid;
      prog.s1 = mid_s1(mid);
      prog.s2 = mid_s2(mid);
      prog.k1 = al.l1;
      prog.k2 = al.l2;
      prog.k3 = al.r1;
      prog.k4 = al.r2;
      prog.phase = al.phase;
      return finish(prog);
    } catch (const DomainError& e) {
      diag += std::string(" ") + e.what() + ";";
    }
  }
  throw CompileError("compile_two_b: no validated path for (" +
                     std::to_string(p.a) + ", " + std::to_string(p.b) + ", " +
                     std::to_string(p.c) + "):" + diag);
}

std::vector<WeylPoint> chamber_sweep_points() {
  const double step = kPi / 28;
  std::vector<WeylPoint> pts;
  auto plane = [&](double a, bool nonnegative_c) {
    for (int i = 0; i * step <= a * (1 + 1e-12); ++i)
      for (int j = nonnegative_c ? 0 : -i; j <= i; ++j)
        pts.push_back({a, i * step, j * step});
  };
  for (int k : {0, 1, 2, 4, 6}) plane(k * step, false);
  plane(kPi / 4 - 1e-3, true);
  plane(kPi / 4, true);
  return pts;
}

std::vector<SweepEntry> chamber_sweep() {
  std::vector<SweepEntry> out;
  for (const WeylPoint& p : chamber_sweep_points()) {
    SweepEntry e;
    e.point = p;
    try {
      BGateProgram prog = compile_two_b(weyl_unitary(p));
      e.ok = true;
      e.mid = prog.mid;
      e.b_count = prog.b_count;
      e.residual = prog.residual;
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace ashn
