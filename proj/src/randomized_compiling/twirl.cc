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

#include "lacc/randomized_compiling/twirl.h"

#include <stdexcept>

#include "lacc/pauli_algebra/clifford_tableau.h"

namespace lacc {

double rotation_twirl_angle(const PauliString &twirl, const PauliString &basis, double theta) {
    if (twirl.num_qubits() != basis.num_qubits()) {
        throw std::invalid_argument("rotation_twirl_angle: dimension mismatch");
    }
    return symplectic_product(twirl, basis) ? -theta : theta;
}

void apply_mask(std::vector<uint8_t> &bits, const std::vector<uint8_t> &mask) {
    if (bits.size() != mask.size()) {
        throw std::invalid_argument("apply_mask: dimension mismatch");
    }
    for (size_t i = 0; i < bits.size(); i++) {
        bits[i] ^= mask[i];
    }
}

namespace {

PauliString uniform_pauli(size_t n, Rng &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t r = rng.below(4);
        p.set_xz(q, r & 1, r >> 1);
    }
    return p;
}

PauliString product(const PauliString &a, const PauliString &b) {
    PauliString r = multiply(a, b);
    r.set_sign(1);
    return r;
}

// D such that D * L * T = L applied after T, with rotations already sign-adjusted.
void push_through(PauliString &d, const GateLayer &layer) {
    switch (layer.kind) {
        case LayerKind::SingleQubitClifford:
            for (size_t q = 0; q < layer.cliffords.size(); q++) {
                conjugate_1q(d, q, layer.cliffords[q]);
            }
            break;
        case LayerKind::HadamardBoundary:
            if (layer.hadamard) {
                for (size_t q = 0; q < d.num_qubits(); q++) {
                    conjugate_h(d, q);
                }
            }
            break;
        case LayerKind::Entangling:
            for (const auto &op : layer.ops) {
                if (op.kind == OpKind::CZ) {
                    conjugate_cz(d, op.qubits[0], op.qubits[1]);
                }
            }
            break;
        case LayerKind::PauliTwirl:
        case LayerKind::Measurement:
            break;
    }
}

}  // namespace

std::pair<LogicalCircuit, TwirlRecord> insert_twirls(const LogicalCircuit &circuit, Rng &rng) {
    circuit.validate();
    size_t n = circuit.n;
    LogicalCircuit out;
    out.n = n;
    out.metadata = circuit.metadata;
    out.metadata["twirled"] = true;
    TwirlRecord rec;

    PauliString prep(n);
    for (size_t q = 0; q < n; q++) {
        prep.set_xz(q, false, rng.coin());
    }
    rec.boundaries.push_back(prep);
    rec.compiled.push_back(prep);
    out.layers.push_back(GateLayer::pauli_twirl(prep));

    PauliString pending(n);  // undo owed by the previous twirl
    for (const GateLayer &layer : circuit.layers) {
        if (layer.kind == LayerKind::PauliTwirl) {
            out.layers.push_back(layer);
            continue;
        }
        PauliString t = uniform_pauli(n, rng);
        rec.boundaries.push_back(t);
        PauliString compiled = product(t, pending);
        rec.compiled.push_back(compiled);
        out.layers.push_back(GateLayer::pauli_twirl(compiled));
        if (layer.kind == LayerKind::Measurement) {
            GateLayer m = layer;
            rec.mask.assign(n, 0);
            for (size_t q = 0; q < n; q++) {
                rec.mask[q] = t.x(q) ? 1 : 0;
                m.flips[q] ^= rec.mask[q];
            }
            out.layers.push_back(m);
            break;
        }
        GateLayer twirled = layer;
        if (layer.kind == LayerKind::Entangling) {
            for (size_t i = 0; i < twirled.ops.size(); i++) {
                EntanglingOp &op = twirled.ops[i];
                if (op.kind != OpKind::Rotation) {
                    continue;
                }
                int sign = symplectic_product(t, op.rotation.basis) ? -1 : 1;
                rec.angle_signs.push_back({out.layers.size(), i, sign});
                op.rotation.angle = rotation_twirl_angle(t, op.rotation.basis, op.rotation.angle);
            }
        }
        out.layers.push_back(twirled);
        pending = t;
        push_through(pending, layer);
    }
    if (rec.mask.empty()) {
        throw std::invalid_argument("insert_twirls: circuit has no measurement layer");
    }
    return {std::move(out), std::move(rec)};
}

}  // namespace lacc
