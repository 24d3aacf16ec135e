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

#include "lacc/trap_compiler/detection.h"

#include <stdexcept>

#include "lacc/noise_models/channel.h"

namespace lacc {

std::vector<CliffordTableau> boundary_propagators(const LogicalCircuit &circuit) {
    size_t n = circuit.n;
    size_t gates = circuit.layers.size();
    if (gates > 0 && circuit.layers.back().kind == LayerKind::Measurement) gates--;
    std::vector<CliffordTableau> out(gates + 1, CliffordTableau(n));
    for (size_t b = gates; b-- > 0;) {
        CliffordTableau layer(n);
        append_layer(layer, circuit.layers[b]);
        out[b] = layer.then(out[b + 1]);
    }
    return out;
}

bool detects(const CliffordTableau &propagator, const PauliString &error) {
    PauliString f = conjugate(propagator, error);
    for (size_t w = 0; w < f.num_words(); w++) {
        if (f.xs()[w] != 0) return true;
    }
    return false;
}

bool acts_at_spam(const PauliString &error) {
    for (size_t w = 0; w < error.num_words(); w++) {
        if (error.xs()[w] != 0) return true;
    }
    return false;
}

std::vector<DetectionCell> single_error_detection(const LogicalCircuit &target, uint64_t draws, Rng &rng) {
    size_t n = target.n;
    if (n > 8) {
        throw std::invalid_argument("single_error_detection: exhaustive injection is capped at 8 qubits");
    }
    uint64_t paulis = uint64_t{1} << (2 * n);
    std::vector<PauliString> errors;
    for (uint64_t i = 0; i < paulis; i++) errors.push_back(local_pauli(i, n));

    std::vector<DetectionCell> cells;
    size_t boundaries = 0;
    for (uint64_t d = 0; d < draws; d++) {
        TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, rng);
        std::vector<CliffordTableau> props = boundary_propagators(pair.first.circuit);
        if (cells.empty()) {
            boundaries = props.size();
            for (size_t b = 0; b < boundaries; b++) {
                for (uint64_t i = 1; i < paulis; i++) {
                    bool spam = b == 0 || b + 1 == boundaries;
                    if (spam && !acts_at_spam(errors[i])) continue;
                    cells.push_back({b, i});
                }
            }
        }
        if (props.size() != boundaries) {
            throw std::logic_error("single_error_detection: trap depth changed between draws");
        }
        for (DetectionCell &c : cells) {
            c.draws++;
            c.detected += detects(props[c.boundary], errors[c.pauli]) ? 1 : 0;
        }
    }
    return cells;
}

}  // namespace lacc
