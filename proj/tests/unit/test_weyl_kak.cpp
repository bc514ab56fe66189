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

#include <catch_amalgamated.hpp>

#include "ashn/bgate_compiler.hpp"
#include "ashn/weyl_kak.hpp"

using namespace ashn;

namespace {

Unitary4 cnot() {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = m(1, 1) = 1;
  m(2, 3) = m(3, 2) = 1;
  return Unitary4(m);
}

bool near(const WeylPoint& p, const WeylPoint& q, double tol) {
  return std::abs(p.a - q.a) < tol && std::abs(p.b - q.b) < tol &&
         std::abs(p.c - q.c) < tol;
}

Unitary4 dress(const Unitary4& u, Rng& rng) {
  return kron(haar_unitary2(rng), haar_unitary2(rng)) * u *
         kron(haar_unitary2(rng), haar_unitary2(rng));
}

}  // namespace

TEST_CASE("weyl_unitary oracles") {
  CHECK(max_abs(weyl_unitary({0, 0, 0}).matrix() - Matrix4::Identity()) <
        1e-15);
  Matrix4 swap = Matrix4::Zero();
  swap(0, 0) = swap(3, 3) = 1;
  swap(1, 2) = swap(2, 1) = 1;
  CHECK(phase_align(weyl_unitary({kPi / 4, kPi / 4, kPi / 4}).matrix(), swap)
            .residual < 1e-12);
  CHECK(near(kak_decompose(weyl_unitary({kPi / 4, 0, 0})).point,
             kak_decompose(cnot()).point, 1e-12));
}

TEST_CASE("kak of named matrices") {
  CHECK(near(kak_decompose(cnot()).point, {kPi / 4, 0, 0}, 1e-10));
  const KakFactors id = kak_decompose(Unitary4());
  CHECK(near(id.point, {0, 0, 0}, 1e-10));
  for (const Unitary2* k : {&id.k1, &id.k2, &id.k3, &id.k4})
    CHECK(phase_align(*k, Unitary2()).residual < 1e-10);
  CHECK(near(kak_decompose(b_matrix()).point, {kPi / 4, kPi / 8, 0}, 1e-10));
}

TEST_CASE("kak factors have unit determinant and reconstruct") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Unitary4 u = haar_unitary4(rng);
    const KakFactors k = kak_decompose(u);
    CHECK(max_abs(k.reconstruct().matrix() - u.matrix()) < 1e-9);
    CHECK(is_canonical(k.point));
    for (const Unitary2* f : {&k.k1, &k.k2, &k.k3, &k.k4})
      CHECK(std::abs(f->det() - Complex(1.0)) < 1e-10);
  }
}

TEST_CASE("kak rejects non-unitary input") {
  Matrix4 m = Matrix4::Identity();
  m(0, 0) = 1.1;
  CHECK_THROWS_AS(kak_decompose(Unitary4(m)), DomainError);
}

TEST_CASE("canonicalize oracles") {
  const auto c1 = canonicalize({0.3, 0.2, -0.1});
  CHECK(near(c1.point, {0.3, 0.2, -0.1}, 1e-15));
  CHECK_FALSE(c1.mirrored);
  CHECK(near(canonicalize({0.2, 0.3, 0.1}).point, {0.3, 0.2, 0.1}, 1e-15));
  const auto face = canonicalize({kPi / 4, 0.2, -0.1});
  CHECK(near(face.point, {kPi / 4, 0.2, 0.1}, 1e-15));
  CHECK(face.mirrored);
}

TEST_CASE("canonicalize is idempotent and orbit invariant") {
  Rng rng(23);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 300; ++i) {
    const WeylPoint p{u(rng), u(rng), u(rng)};
    const WeylPoint c = canonicalize(p).point;
    CHECK(is_canonical(c));
    CHECK(near(canonicalize(c).point, c, 1e-12));
    // A few orbit moves: shift, even sign flip, permutation.
    CHECK(near(canonicalize({p.a + kPi / 2, p.b, p.c}).point, c, 1e-9));
    CHECK(near(canonicalize({-p.a, -p.b, p.c}).point, c, 1e-9));
    CHECK(near(canonicalize({p.b, p.a, p.c}).point, c, 1e-9));
    CHECK(near(canonicalize({p.c, p.a, p.b}).point, c, 1e-9));
  }
}

TEST_CASE("kak of weyl_unitary matches canonicalize") {
  Rng rng(25);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 500; ++i) {
    const WeylPoint p{u(rng), u(rng), u(rng)};
    const WeylPoint c = canonicalize(p).point;
    CHECK(weyl_distance(kak_decompose(weyl_unitary(p)).point, c) < 1e-9);
  }
}

TEST_CASE("weyl distance oracles") {
  CHECK(weyl_distance({0.3, 0.2, 0.1}, {0.3, 0.2, 0.1}) == 0);
  CHECK(weyl_distance({kPi / 4, 0, 0}, {0, 0, 0}) ==
        Catch::Approx(kPi / 4).epsilon(1e-15));
  CHECK(weyl_distance({0.1, 0.1, -0.05}, {0.1, 0.1, 0.05}) == 0);
  CHECK_THROWS_AS(weyl_distance({0.1, 0.3, 0}, {0, 0, 0}), DomainError);
}

TEST_CASE("local invariance of the canonical point") {
  Rng rng(27);
  for (int i = 0; i < 200; ++i) {
    const Unitary4 u = haar_unitary4(rng);
    const WeylPoint p = kak_decompose(u).point;
    CHECK(weyl_distance(kak_decompose(dress(u, rng)).point, p) < 1e-9);
  }
}

TEST_CASE("align_locals contract") {
  Rng rng(29);
  const Unitary4 u = haar_unitary4(rng);
  const LocalAlignment same = align_locals(u, u);
  const Matrix4 rec = same.phase *
                      kron(same.l1, same.l2).matrix() * u.matrix() *
                      kron(same.r1, same.r2).matrix();
  CHECK(max_abs(rec - u.matrix()) < 1e-9);

  for (int i = 0; i < 50; ++i) {
    const Unitary4 v = haar_unitary4(rng);
    const Unitary4 w = dress(v, rng);
    const LocalAlignment a = align_locals(w, v, i);
    const Matrix4 r = a.phase * kron(a.l1, a.l2).matrix() * v.matrix() *
                      kron(a.r1, a.r2).matrix();
    CHECK(max_abs(r - w.matrix()) < 1e-9);
  }
}

TEST_CASE("align_locals on degenerate classes") {
  Rng rng(31);
  for (const WeylPoint& p :
       {WeylPoint{0, 0, 0}, WeylPoint{kPi / 4, 0, 0},
        WeylPoint{kPi / 4, kPi / 4, 0}, WeylPoint{kPi / 4, kPi / 4, kPi / 4},
        WeylPoint{kPi / 4, kPi / 8, kPi / 8}, WeylPoint{0.3, 0.3, 0.3},
        WeylPoint{0.3, 0.3, -0.3}}) {
    const Unitary4 v = weyl_unitary(p);
    const Unitary4 w = dress(v, rng);
    const LocalAlignment a = align_locals(w, v);
    const Matrix4 r = a.phase * kron(a.l1, a.l2).matrix() * v.matrix() *
                      kron(a.r1, a.r2).matrix();
    CHECK(max_abs(r - w.matrix()) < 1e-9);
  }
}

TEST_CASE("align_locals rejects inequivalent pairs") {
  CHECK_THROWS_AS(align_locals(weyl_unitary({0.3, 0.2, 0.1}),
                               weyl_unitary({0.3, 0.2, 0.0})),
                  DomainError);
}
