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

#include "lacc/trap_compiler/trap.h"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "lacc/frame_simulator/stabilizer_state.h"
#include "lacc/pauli_algebra/clifford_tableau.h"

namespace lacc {

std::string to_string(TrapConstruction c) {
    return c == TrapConstruction::Standard ? "standard" : "modified";
}

TrapConstruction trap_construction_from_string(const std::string &text) {
    if (text == "standard") return TrapConstruction::Standard;
    if (text == "modified") return TrapConstruction::Modified;
    throw std::invalid_argument("unknown trap construction '" + text + "'");
}

void validate_target_structure(const LogicalCircuit &target) {
    target.validate();
    const auto &L = target.layers;
    if (L.size() < 4 || (L.size() - 1) % 3 != 0) {
        throw std::invalid_argument("target must consist of (S, G, S) blocks followed by a measurement");
    }
    for (size_t i = 0; i + 1 < L.size(); i++) {
        LayerKind want = i % 3 == 1 ? LayerKind::Entangling : LayerKind::SingleQubitClifford;
        if (L[i].kind != want) {
            throw std::invalid_argument("target layer " + std::to_string(i) + " should be " + to_string(want) +
                                        ", found " + to_string(L[i].kind));
        }
    }
    if (L.back().kind != LayerKind::Measurement) {
        throw std::invalid_argument("target must end in a measurement layer");
    }
}

LogicalCircuit purify_target(const LogicalCircuit &target) {
    LogicalCircuit out = target;
    for (auto &layer : out.layers) {
        for (auto &op : layer.ops) {
            if (op.magic) {
                op.magic_states = 2;
                op.variant = MagicVariant::Purified;
            }
        }
    }
    out.metadata["purified"] = true;
    return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

// H with probability 1/2, otherwise S or S_DAG.
Clifford1Q random_w(Rng &rng) {
    switch (rng.below(4)) {
        case 0:
        case 1:
            return Clifford1Q::H();
        case 2:
            return Clifford1Q::S();
        default:
            return Clifford1Q::S_DAG();
    }
}

bool is_magic(const EntanglingOp &op) {
    return op.magic || (op.kind == OpKind::Rotation && !op.rotation.is_clifford());
}

// Conjugates q through the layer, treating pi/2 trap rotations as absent.
void push_through(PauliString &q, const GateLayer &layer) {
    switch (layer.kind) {
        case LayerKind::SingleQubitClifford:
            for (size_t i = 0; i < layer.cliffords.size(); i++) {
                conjugate_1q(q, i, layer.cliffords[i]);
            }
            break;
        case LayerKind::HadamardBoundary:
            if (layer.hadamard) {
                for (size_t i = 0; i < q.num_qubits(); i++) conjugate_h(q, i);
            }
            break;
        case LayerKind::Entangling:
            for (const auto &op : layer.ops) {
                if (op.kind == OpKind::CZ) {
                    conjugate_cz(q, op.qubits[0], op.qubits[1]);
                } else if (op.kind == OpKind::Rotation && op.k == 0) {
                    conjugate_quarter_rotation(q, op.rotation.basis, op.rotation.quarter_turns());
                }
            }
            break;
        case LayerKind::PauliTwirl:
            conjugate_pauli(q, layer.twirl);
            break;
        case LayerKind::Measurement:
            break;
    }
}

bool opposite(const PauliString &a, const PauliString &b) {
    return a.same_operator(b) && a.sign() != b.sign();
}

// Adjoint corrections for the pi/2 draws that move the state, in a random
// order consistent with every anticommuting pair.
std::vector<PauliString> correction_tail(const std::vector<GateLayer> &layers, size_t n, bool t, Rng &rng,
                                         size_t *non_stabilising) {
    StabilizerState state(n);
    state.apply_layer(GateLayer::hadamard_boundary(n, t));
    std::vector<PauliString> moved;
    for (size_t li = 0; li < layers.size(); li++) {
        for (const auto &op : layers[li].ops) {
            if (op.kind != OpKind::Rotation || op.k != 1) continue;
            PauliString q = op.rotation.basis;
            for (size_t lj = li + 1; lj < layers.size(); lj++) push_through(q, layers[lj]);
            if (state.expectation(q) != 0) continue;
            state.tableau().append_quarter_rotation(q, 1);
            moved.push_back(q);
        }
    }
    *non_stabilising = moved.size();

    // Drop pairs that compose to the identity.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t a = 0; a < moved.size() && !changed; a++) {
            for (size_t b = a + 1; b < moved.size(); b++) {
                if (opposite(moved[a], moved[b])) {
                    moved.erase(moved.begin() + (std::ptrdiff_t)b);
                    moved.erase(moved.begin() + (std::ptrdiff_t)a);
                    changed = true;
                    break;
                }
                if (symplectic_product(moved[a], moved[b])) break;
            }
        }
    }

    // Undo in reverse; anticommuting pairs keep their relative order.
    std::vector<PauliString> pending(moved.rbegin(), moved.rend());
    std::vector<PauliString> order;
    std::vector<uint8_t> placed(pending.size(), 0);
    while (order.size() < pending.size()) {
        std::vector<size_t> ready;
        for (size_t i = 0; i < pending.size(); i++) {
            if (placed[i]) continue;
            bool free = true;
            for (size_t j = 0; j < i && free; j++) {
                free = placed[j] || !symplectic_product(pending[i], pending[j]);
            }
            if (free) ready.push_back(i);
        }
        size_t pick = ready[(size_t)rng.below(ready.size())];
        placed[pick] = 1;
        order.push_back(pending[pick]);
    }
    return order;
}

TrapInstance build_trap(const LogicalCircuit &target, bool modified, bool purified, Rng &rng,
                        const TrapOptions &options) {
    validate_target_structure(target);
    size_t n = target.n;
    size_t blocks = (target.layers.size() - 1) / 3;
    TrapInstance tr;
    tr.construction = modified ? TrapConstruction::Modified : TrapConstruction::Standard;
    tr.magic_variant = purified ? MagicVariant::Purified : MagicVariant::Pi;
    tr.t = options.force_t ? *options.force_t : rng.coin();
    tr.circuit.n = n;

    std::vector<GateLayer> &out = tr.circuit.layers;
    out.push_back(GateLayer::hadamard_boundary(n, tr.t));
    for (size_t b = 0; b < blocks; b++) {
        const GateLayer &g = target.layers[3 * b + 1];
        std::vector<Clifford1Q> pre(n, Clifford1Q()), post(n, Clifford1Q());
        std::vector<uint8_t> used(n, 0);
        std::vector<EntanglingOp> ops;
        for (const EntanglingOp &op : g.ops) {
            if (op.kind == OpKind::CZ) {
                bool first_controls = rng.coin();
                size_t control = first_controls ? op.qubits[0] : op.qubits[1];
                size_t tgt = first_controls ? op.qubits[1] : op.qubits[0];
                Clifford1Q s = rng.coin() ? Clifford1Q::S() : Clifford1Q::S_DAG();
                pre[control] = s;
                post[control] = s.inverse();
                pre[tgt] = Clifford1Q::H();
                post[tgt] = Clifford1Q::H();
                used[control] = used[tgt] = 1;
                tr.cnot_orientation.push_back(first_controls ? 1 : 0);
                ops.push_back(op);
                continue;
            }
            EntanglingOp gadget = op;
            for (size_t q : op.qubits) {
                pre[q] = random_w(rng);
                post[q] = pre[q].inverse();
                used[q] = 1;
            }
            gadget.kind = OpKind::IdentityGadget;
            gadget.k = 0;
            gadget.inner_sandwich.clear();
            gadget.repetitions = 1;
            if (is_magic(op)) {
                gadget.magic = true;
                gadget.magic_states = purified ? 2 : 1;
                gadget.variant = purified ? MagicVariant::Purified : MagicVariant::Pi;
                gadget.rotation.angle = kPi;
                if (modified) {
                    int k = options.force_k ? *options.force_k : (int)(1 + rng.below(2));
                    if (k != 1 && k != 2) {
                        throw std::invalid_argument("modified trap: k must be 1 or 2");
                    }
                    gadget.k = k;
                    tr.k_draws.push_back((uint8_t)k);
                    if (k == 1) {
                        gadget.kind = OpKind::Rotation;
                        gadget.rotation.angle = kPi / 2;
                        gadget.variant = MagicVariant::PiOver2;
                    }
                }
            } else {
                gadget.magic = false;
                gadget.magic_states = 1;
                gadget.variant = MagicVariant::None;
            }
            if (op.kind == OpKind::Rotation && op.rotation.mechanism == RotationMechanism::RUS) {
                uint64_t failures = rng.geometric(0.5);
                uint64_t reps = std::min<uint64_t>(failures + 1, std::max<uint32_t>(options.rus_max_attempts, 1));
                gadget.repetitions = (uint32_t)reps;
                for (uint32_t r = 1; r < gadget.repetitions; r++) {
                    std::vector<Clifford1Q> w;
                    for (size_t i = 0; i < op.qubits.size(); i++) w.push_back(random_w(rng));
                    gadget.inner_sandwich.push_back(std::move(w));
                }
            }
            ops.push_back(std::move(gadget));
        }
        for (size_t q = 0; q < n; q++) {
            if (!used[q]) {
                pre[q] = random_w(rng);
                post[q] = pre[q].inverse();
            }
        }
        out.push_back(GateLayer::single_qubit(pre, LayerRole::W));
        out.push_back(GateLayer::entangling(std::move(ops), LayerRole::J));
        out.push_back(GateLayer::single_qubit(post, LayerRole::WInverse));
    }

    if (modified) {
        // Randomly reorder neighbouring W layers per qubit, keeping their product.
        for (size_t b = 0; b + 1 < blocks; b++) {
            GateLayer &first = out[3 * b + 3];
            GateLayer &second = out[3 * b + 4];
            for (size_t q = 0; q < n; q++) {
                if (!rng.coin()) continue;
                Clifford1Q a = first.cliffords[q], c = second.cliffords[q];
                first.cliffords[q] = c;
                second.cliffords[q] = c.inverse().then(a).then(c);
            }
        }
        std::vector<PauliString> tail = correction_tail(out, n, tr.t, rng, &tr.non_stabilising);
        std::vector<EntanglingOp> current;
        std::vector<uint8_t> busy(n, 0);
        auto flush = [&]() {
            if (current.empty()) return;
            out.push_back(GateLayer::entangling(std::move(current), LayerRole::Tail));
            current.clear();
            std::fill(busy.begin(), busy.end(), 0);
        };
        for (const PauliString &q : tail) {
            std::vector<size_t> support = q.support();
            bool clash = std::any_of(support.begin(), support.end(), [&](size_t i) { return busy[i] != 0; });
            if (clash) flush();
            RotationGate r{q, -kPi / 2, RotationMechanism::ProjectiveMeasurement};
            current.push_back(EntanglingOp::rotation_op(r, false));
            for (size_t i : support) busy[i] = 1;
        }
        flush();
        tr.tail = std::move(tail);
    }

    out.push_back(GateLayer::hadamard_boundary(n, tr.t));
    out.push_back(GateLayer::measurement(n));
    for (const auto &layer : out) {
        if (layer.role == LayerRole::W || layer.role == LayerRole::WInverse) {
            tr.w_layers.push_back(layer.cliffords);
        }
    }
    tr.expected_output.assign(n, 0);
    tr.circuit.metadata = ordered_json{{"builder", "trap"},
                                       {"construction", to_string(tr.construction)},
                                       {"target", target.metadata}};
    tr.circuit.validate();
    return tr;
}

}  // namespace

TrapPair compile_trap(const LogicalCircuit &target, TrapConstruction construction, bool purified, Rng &rng,
                      const TrapOptions &options) {
    if (construction == TrapConstruction::Modified) {
        return TrapPair{compile_trap_modified(target, rng, options), std::nullopt};
    }
    TrapInstance first = build_trap(target, false, purified, rng, options);
    if (purified) {
        return TrapPair{std::move(first), std::nullopt};
    }
    // Same circuit, with each |pi> made from |pi/2> and a fault-tolerant S.
    TrapInstance second = first;
    second.magic_variant = MagicVariant::PiOver2;
    for (auto &layer : second.circuit.layers) {
        for (auto &op : layer.ops) {
            if (op.magic) op.variant = MagicVariant::PiOver2;
        }
    }
    return TrapPair{std::move(first), std::move(second)};
}

TrapInstance compile_trap_modified(const LogicalCircuit &target, Rng &rng, const TrapOptions &options) {
    return build_trap(target, true, false, rng, options);
}

std::vector<int> noiseless_trap_output(const TrapInstance &trap) {
    const LogicalCircuit &c = trap.circuit;
    StabilizerState state(c.n);
    for (const auto &layer : c.layers) state.apply_layer(layer);
    std::vector<int> bits = state.reference_bits();
    std::vector<uint8_t> flips = c.measurement_flips();
    for (size_t q = 0; q < bits.size(); q++) {
        if (bits[q] >= 0) bits[q] ^= flips[q];
    }
    return bits;
}

ordered_json TrapInstance::randomization_record() const {
    ordered_json w = ordered_json::array();
    for (const auto &layer : w_layers) {
        ordered_json names = ordered_json::array();
        for (auto c : layer) names.push_back(c.name());
        w.push_back(names);
    }
    ordered_json tail_json = ordered_json::array();
    for (const auto &p : tail) tail_json.push_back(p.str());
    return ordered_json{{"construction", to_string(construction)},
                        {"t", t},
                        {"magic_variant", to_string(magic_variant)},
                        {"w_layers", w},
                        {"cnot_orientation", cnot_orientation},
                        {"k_draws", k_draws},
                        {"tail", tail_json},
                        {"non_stabilising", non_stabilising},
                        {"expected_output", expected_output}};
}

ordered_json TrapInstance::to_json() const {
    ordered_json j = lacc::to_json(circuit);
    j["randomization"] = randomization_record();
    return j;
}

}  // namespace lacc
