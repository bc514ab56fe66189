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

#include "ashn/json_io.hpp"

using namespace ashn;
using json_io::Json;

TEST_CASE("matrix round trip") {
  Rng rng(21);
  const Unitary4 u = haar_unitary4(rng);
  const Json j = json_io::matrix_to_json(u.matrix());
  CHECK(j["rows"] == 4);
  CHECK(j["data"].size() == 16);
  const Unitary4 back = json_io::unitary4_from_json(Json::parse(j.dump()));
  CHECK(max_abs(back.matrix() - u.matrix()) == 0);
}

TEST_CASE("matrix json validation") {
  CHECK_THROWS_AS(json_io::matrix_from_json(Json::array()), DomainError);
  CHECK_THROWS_AS(
      json_io::matrix_from_json(Json{{"rows", 2}, {"cols", 2}, {"data", {1, 2}}}),
      DomainError);
  const Json nonunit{{"rows", 2},
                     {"cols", 2},
                     {"data", {{2, 0}, {0, 0}, {0, 0}, {1, 0}}}};
  CHECK_THROWS_AS(json_io::unitary2_from_json(nonunit), DomainError);
  const Json two{{"rows", 2}, {"cols", 2}, {"data", {{1, 0}, {0, 0}, {0, 0}, {1, 0}}}};
  CHECK_THROWS_AS(json_io::unitary4_from_json(two), DomainError);
  CHECK_NOTHROW(json_io::unitary2_from_json(two));
}

TEST_CASE("controls round trip") {
  SynthesisRequest q;
  q.point = {kPi / 4, 0, 0};
  const auto c = synthesize(q);
  const auto back = json_io::controls_from_json(json_io::to_json(c));
  CHECK(back.tau == c.tau);
  CHECK(back.omega1 == c.omega1);
  CHECK(back.omega2 == c.omega2);
  CHECK(back.delta == c.delta);
  CHECK(back.variant == c.variant);
  Json bad = json_io::to_json(c);
  bad["variant"] = "XX";
  CHECK_THROWS_AS(json_io::controls_from_json(bad), DomainError);
  bad = json_io::to_json(c);
  bad.erase("tau");
  CHECK_THROWS_AS(json_io::controls_from_json(bad), DomainError);
}

TEST_CASE("points") {
  const WeylPoint p{0.1, 0.2, -0.3};
  const WeylPoint q = json_io::point_from_json(json_io::to_json(p));
  CHECK(q.a == p.a);
  CHECK(q.c == p.c);
  CHECK_THROWS_AS(json_io::point_from_json(Json{{"a", 1}}), DomainError);
}

TEST_CASE("network json") {
  const Json j{{"capacitances_ff", {{"C01", 10}, {"C12", 2}}},
               {"ej_ghz", {1, 2, 3}}};
  const auto n = json_io::network_from_json(j);
  CHECK(n.mutuals_ff.at("C12") == 2);
  CHECK(n.ej_ghz[2] == 3);
  CHECK_THROWS_AS(json_io::network_from_json(Json{{"ej_ghz", {1, 2, 3}}}),
                  DomainError);
  CHECK_THROWS_AS(json_io::network_from_json(
                      Json{{"capacitances_ff", {{"C01", "x"}}}, {"ej_ghz", {1, 2, 3}}}),
                  DomainError);
  CHECK_THROWS_AS(json_io::network_from_json(
                      Json{{"capacitances_ff", {{"C01", 1}}}, {"ej_ghz", {1, 2}}}),
                  DomainError);
}

TEST_CASE("key order is stable") {
  const Json j = json_io::to_json(WeylPoint{1, 2, 3});
  CHECK(j.dump() == R"({"a":1.0,"b":2.0,"c":3.0})");
}
