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

#include <ostream>

namespace ashn::cli {

/** Default coupling in MHz when --g-mhz is absent. */
inline constexpr const char* kGEnvVar = "ASHN_G_MHZ";
inline constexpr double kDefaultGMhz = 6.25;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

/** Runs one subcommand; argv[0] is the program name. */
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ashn::cli
