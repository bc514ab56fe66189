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
 * JSON encodings. Matrices are {"rows", "cols", "data": [[re, im], ...]}
 * in row-major order.
 */

#include <Eigen/Dense>
#include <json.hpp>

#include "ashn/ashn_synth.hpp"
#include "ashn/bench_noise.hpp"
#include "ashn/bgate_compiler.hpp"
#include "ashn/device_model.hpp"
#include "ashn/evolve_verify.hpp"
#include "ashn/pulse_program.hpp"
#include "ashn/states_circuits.hpp"
#include "ashn/weyl_kak.hpp"

namespace ashn::json_io {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Eigen::MatrixXcd& m);
/** Throws DomainError on malformed input. */
Eigen::MatrixXcd matrix_from_json(const Json& j);
Unitary2 unitary2_from_json(const Json& j);
Unitary4 unitary4_from_json(const Json& j);

Json to_json(const WeylPoint& p);
WeylPoint point_from_json(const Json& j);

Json to_json(const KakFactors& k);
Json to_json(const NormalizedControls& c);
NormalizedControls controls_from_json(const Json& j);
Json to_json(const PhysicalControls& c);
Json to_json(const LocalAlignment& a);
Json to_json(const VerificationReport& r);
Json to_json(const BGateProgram& p);
Json to_json(const SweepEntry& e);
Json to_json(const Pmw4Sequence& s);
Json to_json(const SampledWaveform& w);
Json to_json(const GateSchedule& s);
Json to_json(const XebResult& r);
Json to_json(const ErrorMapResult& r);
Json to_json(const CircuitSpec& c);
Json to_json(const Statevector& s);
Json to_json(const DeviceDerived& d);
/** {"capacitances_ff": {"C01": ...}, "ej_ghz": [q1, c, q2]} or
 *  "frequencies_ghz" in place of "ej_ghz". */
CapacitanceNetwork network_from_json(const Json& j);

}  // namespace ashn::json_io
