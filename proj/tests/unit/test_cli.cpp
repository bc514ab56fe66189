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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ashn/cli.hpp"
#include "ashn/json_io.hpp"

using namespace ashn;

namespace {

struct Run {
  int rc = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ashn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string golden_dir() { return ASHN_GOLDEN_DIR; }
std::string input(const std::string& name) {
  return golden_dir() + "/inputs/" + name;
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

void check_golden(const std::string& name, const std::string& actual) {
  const std::string path = golden_dir() + "/" + name;
  if (std::getenv("ASHN_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  INFO("golden " << path << " (regenerate with ASHN_UPDATE_GOLDEN=1)");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == actual);
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

}  // namespace

TEST_CASE("golden outputs are byte stable") {
  const std::vector<GoldenCase> cases = {
      {"canon.json", {"--json", "canon", "--a", "1.2", "--b", "-0.3", "--c", "0.5"}},
      {"kak_cnot.json", {"--json", "kak", "--matrix", input("cnot.json")}},
      {"synth_cnot.json", {"--json", "synth", "--gate", "cnot"}},
      {"synth_b.txt", {"synth", "--gate", "b"}},
      {"verify_iswap.json", {"--json", "verify", "--gate", "iswap"}},
      {"bgate_cnot.json", {"--json", "bgate", "--matrix", input("cnot.json")}},
      {"pmw4_x.json", {"--json", "pmw4", "--matrix", input("pauli_x.json")}},
      {"schedule_sqrt_iswap.json",
       {"--json", "schedule", "--gate", "sqrt_iswap", "--rate", "0.5"}},
      {"xeb_small.csv",
       {"xeb", "--depths", "1,2,4", "--circuits", "4", "--depolarizing", "0.01",
        "--seed", "11"}},
      {"wstate_4.json", {"--json", "wstate", "--n", "4"}},
      {"dicke_4_2.txt", {"dicke", "--n", "4", "--k", "2"}},
      {"device_reference.json", {"--json", "device", "--caps", input("caps.json")}},
  };
  for (const auto& c : cases) {
    INFO(c.file);
    const Run a = run(c.args);
    CHECK(a.rc == 0);
    CHECK(a.err.empty());
    const Run b = run(c.args);
    CHECK(a.out == b.out);
    check_golden(c.file, a.out);
  }
}

TEST_CASE("json output parses") {
  const Run r = run({"--json", "synth", "--gate", "cnot"});
  REQUIRE(r.rc == 0);
  const auto j = json_io::Json::parse(r.out);
  CHECK(j.contains("normalized"));
  CHECK(j.contains("physical"));
}

TEST_CASE("usage errors exit 2 with one line") {
  const std::vector<std::vector<std::string>> bad = {
      {"synth", "--gate", "nope"},
      {"synth", "--bogus"},
      {"frobnicate"},
      {"xeb", "--depths", "1,2"},
      {"errormap"},
      {"kak", "--matrix", input("malformed.json")},
      {"kak", "--matrix", input("wrong_size.json")},
      {"kak", "--matrix", input("does_not_exist.json")},
      {"synth", "--a", "0.3"},
      {"synth", "--gate", "cnot", "--cap", "-1"},
      {"wstate", "--n", "1"},
      {"dicke", "--n", "3", "--k", "4"},
      {"xeb", "--depths", "4,2", "--seed", "1"},
      {"wstate", "--n", "3", "--phases", "0.1"},
  };
  for (const auto& args : bad) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    INFO(joined);
    const Run r = run(args);
    CHECK(r.rc == 2);
    CHECK(lines(r.err) == 1);
    CHECK(r.out.empty());
  }
}

TEST_CASE("g from the environment") {
  ::setenv(cli::kGEnvVar, "12.5", 1);
  const Run r = run({"--json", "synth", "--gate", "iswap"});
  ::unsetenv(cli::kGEnvVar);
  REQUIRE(r.rc == 0);
  const auto j = json_io::Json::parse(r.out);
  CHECK(j["physical"]["t_ns"].get<double>() == Catch::Approx(20));
  const Run flag = run({"--json", "--g-mhz", "12.5", "synth", "--gate", "iswap"});
  CHECK(flag.out == r.out);
  ::setenv(cli::kGEnvVar, "abc", 1);
  const Run bad = run({"synth", "--gate", "iswap"});
  ::unsetenv(cli::kGEnvVar);
  CHECK(bad.rc == 2);
}

TEST_CASE("failed verification exits 1") {
  // A CNOT drive checked against the B class.
  const Run s = run({"--json", "synth", "--gate", "cnot"});
  REQUIRE(s.rc == 0);
  const auto j = json_io::Json::parse(s.out);
  const std::string path = "cli_test_controls.json";
  std::ofstream(path) << j["normalized"].dump();
  const Run v = run({"verify", "--controls", path, "--gate", "b"});
  CHECK(v.rc == 1);
  const Run ok = run({"verify", "--controls", path, "--gate", "cnot"});
  CHECK(ok.rc == 0);
  std::remove(path.c_str());
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.rc == 0);
  CHECK_FALSE(r.out.empty());
}
