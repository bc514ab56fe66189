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

#include <string>
#include <vector>

#include "ashn/weyl_kak.hpp"

namespace ashn {

struct MidLayerParams {
  double beta1 = 0, beta2 = 0;
  double s1_angle = 0;
  /** sin(beta2) came from the b -> pi/4 limit rather than the ratio. */
  bool limit_branch = false;
};

/**
 * b_count = 2: phase (k1 x k2) B (s1 x s2) B (k3 x k4)
 * b_count = 1: phase (k1 x k2) B (k3 x k4)
 * b_count = 0: phase (k1 x k2) (k3 x k4)
 */
struct BGateProgram {
  Unitary2 k3, k4;
  Unitary2 s1, s2;
  Unitary2 k1, k2;
  Complex phase{1.0, 0.0};
  int b_count = 2;
  MidLayerParams mid;
  double residual = 0;

  Unitary4 reconstruct() const;
};

/** exp(i(pi/4 XX + pi/8 YY)). */
Unitary4 b_matrix();

MidLayerParams mid_layer(const WeylPoint& p);
Unitary2 mid_s1(const MidLayerParams& m);
/** exp(i beta2/2 Z) exp(i beta1/2 Y) exp(i beta2/2 Z). */
Unitary2 mid_s2(const MidLayerParams& m);
/** B (S1 x S2) B. */
Unitary4 mid_unitary(const MidLayerParams& m);

BGateProgram compile_two_b(const Unitary4& target);

struct SweepEntry {
  WeylPoint point;
  bool ok = false;
  MidLayerParams mid;
  int b_count = 0;
  double residual = 0;
  std::string error;
};

/**
 * Seven constant-a cuts of the chamber on a pi/28 lattice in (b, c):
 * a in {0, 1, 2, 4, 6} pi/28, a = pi/4 - 1e-3 and the a = pi/4 face
 * (c >= 0 on the last two); 152 points.
 */
std::vector<WeylPoint> chamber_sweep_points();
std::vector<SweepEntry> chamber_sweep();

}  // namespace ashn
