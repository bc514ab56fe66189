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

#include <cstdint>
#include <utility>

#include "ashn/mat_core.hpp"

namespace ashn {

inline constexpr double kChamberTol = 1e-10;
inline constexpr double kEquivalenceTol = 1e-8;

/** Interaction coordinates of exp(i(a XX + b YY + c ZZ)). */
struct WeylPoint {
  double a = 0, b = 0, c = 0;
};

/** pi/4 >= a >= b >= |c|, c >= 0 when a = pi/4. */
bool is_canonical(const WeylPoint& p, double tol = kChamberTol);

/** u = phase * (k1 x k2) * W(point) * (k3 x k4), det(k_i) = 1. */
struct KakFactors {
  Unitary2 k1, k2, k3, k4;
  WeylPoint point;
  Complex phase{1.0, 0.0};

  Unitary4 reconstruct() const;
};

struct CanonicalForm {
  WeylPoint point;
  /**
   * Set when the result lies on the a = pi/4 face with c > 0 while the
   * input's reduced c was negative (the c -> -c face identification).
   */
  bool mirrored = false;
};

/** exp(+i(a XX + b YY + c ZZ)). */
Unitary4 weyl_unitary(const WeylPoint& p);

KakFactors kak_decompose(const Unitary4& u);

/** Orbit enumeration over pi/2 shifts, even sign flips and permutations. */
CanonicalForm canonicalize(const WeylPoint& p);

/** Throws DomainError for non-canonical inputs. */
double weyl_distance(const WeylPoint& p, const WeylPoint& q);

struct LocalAlignment {
  Unitary2 l1, l2, r1, r2;
  Complex phase{1.0, 0.0};
  double residual = 0;
};

/** phase * (l1 x l2) * v * (r1 x r2) = u. */
LocalAlignment align_locals(const Unitary4& u, const Unitary4& v,
                            std::uint64_t seed = 0);

}  // namespace ashn
