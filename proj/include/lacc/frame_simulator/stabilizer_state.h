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

#ifndef LACC_FRAME_SIMULATOR_STABILIZER_STATE_H
#define LACC_FRAME_SIMULATOR_STABILIZER_STATE_H

#include <vector>

#include "lacc/circuit_ir/circuit.h"
#include "lacc/pauli_algebra/clifford_tableau.h"

namespace lacc {

/// Stabilizer state C|0...0>, stored as the tableau of C. Stabilizers are the
/// images of Z_i and destabilizers the images of X_i.
class StabilizerState {
   public:
    explicit StabilizerState(size_t num_qubits);

    size_t num_qubits() const {
        return tableau_.num_qubits();
    }
    const CliffordTableau &tableau() const {
        return tableau_;
    }
    CliffordTableau &tableau() {
        return tableau_;
    }

    void apply_layer(const GateLayer &layer) {
        append_layer(tableau_, layer);
    }

    /// +1 or -1 when the state is an eigenstate of p, 0 otherwise.
    int expectation(const PauliString &p) const;
    bool stabilized_by(const PauliString &p) const {
        return expectation(p) != 0;
    }

    /// Deterministic computational-basis outcome, or -1 for a random bit.
    std::vector<int> reference_bits() const;

   private:
    CliffordTableau tableau_;
};

}  // namespace lacc

#endif
