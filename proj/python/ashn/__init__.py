# Copyright 2026 The ashn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Two-qubit gate synthesis, two-B compilation and pulse lowering."""

from ashn._core import (  # noqa: F401
    CompileError,
    DomainError,
    SolverError,
    b_matrix,
    canonicalize,
    compile_two_b,
    dicke_state,
    effective_coupling,
    kak,
    named_gates,
    pmw4,
    synthesize,
    verify,
    w_state,
    weyl_unitary,
    xeb,
    zero_coupling_frequency,
)

__all__ = [
    "CompileError",
    "DomainError",
    "SolverError",
    "b_matrix",
    "canonicalize",
    "compile_two_b",
    "dicke_state",
    "effective_coupling",
    "kak",
    "named_gates",
    "pmw4",
    "synthesize",
    "verify",
    "w_state",
    "weyl_unitary",
    "xeb",
    "zero_coupling_frequency",
]
