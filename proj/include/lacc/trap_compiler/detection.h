// Copyright 2026 The lacc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LACC_TRAP_COMPILER_DETECTION_H
#define LACC_TRAP_COMPILER_DETECTION_H

#include <vector>

#include "lacc/pauli_algebra/clifford_tableau.h"
#include "lacc/trap_compiler/trap.h"

namespace lacc {

/// For each layer boundary b (0 = after preparation, i + 1 = after layer i, up
/// to the last layer before measurement) the Clifford applied from b to the end.
std::vector<CliffordTableau> boundary_propagators(const LogicalCircuit &circuit);

/// True when the error, propagated to the measurement, flips an output bit.
bool detects(const CliffordTableau &propagator, const PauliString &error);

/// Preparation and measurement see only the X part of an error.
bool acts_at_spam(const PauliString &error);

struct DetectionCell {
    size_t boundary;
    uint64_t pauli;  // local_pauli index over all n qubits
    uint64_t draws = 0;
    uint64_t detected = 0;

    double frequency() const {
        return draws ? (double)detected / (double)draws : 0.0;
    }
};

/// Injects every nontrivial n-qubit Pauli at every boundary of `draws` random
/// standard traps of the target. SPAM boundaries skip errors with no X part.
std::vector<DetectionCell> single_error_detection(const LogicalCircuit &target, uint64_t draws, Rng &rng);

}  // namespace lacc

#endif
