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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lacc/circuit_ir/builders.h"
#include "lacc/frame_simulator/dense.h"
#include "lacc/frame_simulator/stabilizer_state.h"
#include "lacc/frame_simulator/trap_shot.h"
#include "lacc/trap_compiler/detection.h"
#include "lacc/trap_compiler/trap.h"
#include "test_util.h"

using namespace lacc;
using namespace lacc_test;

namespace {

LogicalCircuit small_target(size_t n, size_t depth, Rng &rng, bool trotter) {
    if (!trotter) return build_iqp(n, depth, rng);
    TrotterOptions opt;
    opt.mechanism = RotationMechanism::RUS;
    return build_trotter(heisenberg_chain(n, 1.0, 1.0, rng), 0.5, std::max<size_t>(1, depth / 6), opt);
}

bool all_zero(const std::vector<int> &bits) {
    for (int b : bits)
        if (b != 0) return false;
    return true;
}

NoiseSpec nisq(double p) {
    NoiseSpec s;
    s.regime.regime = Regime::NISQ;
    s.regime.p_phys = p;
    return s;
}

double three_sigma(double p, uint64_t n) {
    return 3 * std::sqrt(p * (1 - p) / (double)n);
}

}  // namespace

TEST(trap_compiler, noiseless_traps_are_deterministic) {
    Rng rng = independent_test_rng();
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 2 + rng.below(5);
        LogicalCircuit target = small_target(n, 2 + rng.below(3), rng, trial % 3 == 0);
        TrapConstruction c = trial % 2 ? TrapConstruction::Modified : TrapConstruction::Standard;
        TrapPair pair = compile_trap(target, c, trial % 4 == 1, rng);
        for (size_t v = 0; v < pair.size(); v++) {
            const TrapInstance &trap = pair[v];
            ASSERT_TRUE(trap.circuit.is_clifford());
            ASSERT_TRUE(all_zero(noiseless_trap_output(trap))) << trial;
            ASSERT_EQ(trap.expected_output, std::vector<uint8_t>(n, 0));
        }
    }
}

TEST(trap_compiler, dense_oracle_agrees_on_determinism) {
    Rng rng = independent_test_rng();
    for (int trial = 0; trial < 40; trial++) {
        LogicalCircuit target = small_target(3, 3, rng, trial % 2 == 1);
        TrapPair pair = compile_trap(target, trial % 4 < 2 ? TrapConstruction::Standard : TrapConstruction::Modified,
                                     false, rng);
        std::vector<double> dist = exact_output_distribution(pair.first.circuit, nullptr);
        ASSERT_NEAR(dist[0], 1.0, 1e-10) << trial;
    }
}

TEST(trap_compiler, structure_matches_target) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(5, 4, rng);
    TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, rng);
    ASSERT_EQ(pair.size(), 2u);
    const LogicalCircuit &trap = pair.first.circuit;
    ASSERT_EQ(trap.layers.size(), target.layers.size() + 2);
    ASSERT_EQ(trap.layers.front().kind, LayerKind::HadamardBoundary);
    ASSERT_EQ(trap.layers[trap.layers.size() - 2].kind, LayerKind::HadamardBoundary);
    ASSERT_EQ(trap.layers.front().hadamard, pair.first.t);
    for (size_t i = 0; i + 1 < target.layers.size(); i++) {
        const GateLayer &tl = target.layers[i];
        const GateLayer &rl = trap.layers[i + 1];
        ASSERT_EQ(tl.kind, rl.kind);
        if (tl.kind != LayerKind::Entangling) continue;
        ASSERT_EQ(rl.role, LayerRole::J);
        ASSERT_EQ(tl.ops.size(), rl.ops.size());
        for (size_t k = 0; k < tl.ops.size(); k++) {
            ASSERT_EQ(tl.ops[k].qubits, rl.ops[k].qubits);
            if (tl.ops[k].kind == OpKind::CZ) {
                ASSERT_EQ(rl.ops[k].kind, OpKind::CZ);
            } else {
                ASSERT_EQ(rl.ops[k].kind, OpKind::IdentityGadget);
                ASSERT_TRUE(rl.ops[k].magic);
            }
        }
    }
    // Both versions share all randomness and differ only in magic preparation.
    const TrapInstance &a = pair.first, &b = *pair.second;
    ASSERT_EQ(a.magic_variant, MagicVariant::Pi);
    ASSERT_EQ(b.magic_variant, MagicVariant::PiOver2);
    ASSERT_EQ(a.t, b.t);
    ASSERT_EQ(a.w_layers, b.w_layers);
    ASSERT_EQ(a.circuit.magic_state_count(), b.circuit.magic_state_count());
    ASSERT_EQ(a.circuit.magic_state_count(), target.t_count());
}

TEST(trap_compiler, purified_trap_consumes_two_states_per_slot) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(4, 4, rng);
    size_t k = target.magic_slot_count();
    ASSERT_GT(k, 0u);
    TrapPair pair = compile_trap(target, TrapConstruction::Standard, true, rng);
    ASSERT_EQ(pair.size(), 1u);
    ASSERT_EQ(pair.first.magic_variant, MagicVariant::Purified);
    ASSERT_EQ(pair.first.circuit.magic_state_count(), 2 * k);
    LogicalCircuit pt = purify_target(target);
    ASSERT_EQ(pt.magic_state_count(), 2 * k);
}

TEST(trap_compiler, cz_sandwich_is_random_cnot) {
    LogicalCircuit target;
    target.n = 2;
    target.layers = {GateLayer::identity(2, LayerRole::SPre), GateLayer::entangling({EntanglingOp::cz(0, 1)}, LayerRole::G),
                     GateLayer::identity(2, LayerRole::SPost), GateLayer::measurement(2)};
    Rng rng = independent_test_rng();
    int seen = 0;
    for (int trial = 0; trial < 64; trial++) {
        TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, rng);
        const LogicalCircuit &c = pair.first.circuit;
        Mat u = Mat::Identity(4, 4);
        for (size_t li = 1; li <= 3; li++) {
            const GateLayer &l = c.layers[li];
            if (l.kind == LayerKind::SingleQubitClifford) {
                for (size_t q = 0; q < 2; q++) u = embed_1q(clifford_matrix(l.cliffords[q]), q, 2) * u;
            } else {
                u = cz_matrix(0, 1, 2) * u;
            }
        }
        bool first_controls = pair.first.cnot_orientation.at(0) == 1;
        Mat cx = first_controls ? cx_matrix(0, 1, 2) : cx_matrix(1, 0, 2);
        // Equal up to a global phase.
        cd phase = (cx.adjoint() * u).trace() / 4.0;
        ASSERT_NEAR(std::abs(phase), 1.0, 1e-12);
        ASSERT_LT((u - phase * cx).norm(), 1e-12);
        seen |= first_controls ? 1 : 2;
    }
    ASSERT_EQ(seen, 3);
}

TEST(trap_compiler, rus_repetitions_are_geometric_and_capped) {
    Rng rng = independent_test_rng();
    RotationGate r{PauliString::from_text("Z"), 0.3, RotationMechanism::RUS};
    LogicalCircuit target;
    target.n = 1;
    target.layers = {GateLayer::identity(1, LayerRole::SPre),
                     GateLayer::entangling({EntanglingOp::rotation_op(r, true)}, LayerRole::G),
                     GateLayer::identity(1, LayerRole::SPost), GateLayer::measurement(1)};
    TrapOptions opt;
    opt.rus_max_attempts = 4;
    const int draws = 20000;
    std::vector<int> counts(5, 0);
    for (int i = 0; i < draws; i++) {
        TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, rng, opt);
        const EntanglingOp &op = pair.first.circuit.layers[2].ops[0];
        ASSERT_GE(op.repetitions, 1u);
        ASSERT_LE(op.repetitions, 4u);
        ASSERT_EQ(op.inner_sandwich.size(), op.repetitions - 1);
        counts[op.repetitions]++;
    }
    for (int r = 1; r <= 3; r++) {
        double p = std::ldexp(1.0, -r);
        ASSERT_NEAR(counts[r] / (double)draws, p, three_sigma(p, draws) + 1e-9);
    }
    ASSERT_NEAR(counts[4] / (double)draws, 0.125, three_sigma(0.125, draws));
    ASSERT_DOUBLE_EQ(rus_expected_attempts(), 2.0);
}

TEST(trap_compiler, modified_tail_empty_when_quarter_rotations_stabilise) {
    Rng rng = independent_test_rng();
    TrapOptions opt;
    opt.force_k = 1;
    opt.force_t = false;
    int checked = 0, moved = 0;
    for (int trial = 0; trial < 400; trial++) {
        LogicalCircuit target = build_iqp(3, 3, rng);
        if (target.magic_slot_count() == 0) continue;
        TrapInstance trap = compile_trap_modified(target, rng, opt);
        ASSERT_TRUE(all_zero(noiseless_trap_output(trap)));
        // Forward simulation with the quarter rotations removed; each one is
        // checked against the state it acts on.
        StabilizerState state(3);
        bool all_stabilise = true;
        for (const GateLayer &layer : trap.circuit.layers) {
            if (layer.role == LayerRole::Tail || layer.kind == LayerKind::Measurement) break;
            GateLayer rest = layer;
            rest.ops.clear();
            for (const auto &op : layer.ops) {
                if (op.kind == OpKind::Rotation && op.k == 1) {
                    all_stabilise &= state.expectation(op.rotation.basis) != 0;
                } else {
                    rest.ops.push_back(op);
                }
            }
            state.apply_layer(rest);
        }
        if (!all_stabilise) {
            moved++;
            ASSERT_GT(trap.non_stabilising, 0u);
            continue;
        }
        checked++;
        ASSERT_EQ(trap.non_stabilising, 0u);
        ASSERT_TRUE(trap.tail.empty());
        ASSERT_EQ(trap.circuit.layers.size(), target.layers.size() + 2);
    }
    ASSERT_GT(checked, 0);
    ASSERT_GT(moved, 0);
}

TEST(trap_compiler, modified_tail_is_bounded_and_clifford) {
    Rng rng = independent_test_rng();
    size_t nonempty = 0;
    for (int trial = 0; trial < 300; trial++) {
        LogicalCircuit target = build_iqp(4, 4, rng);
        TrapInstance trap = compile_trap_modified(target, rng);
        ASSERT_LE(trap.tail.size(), trap.non_stabilising);
        ASSERT_EQ(trap.k_draws.size(), target.magic_slot_count());
        size_t tail_layers = 0;
        for (const auto &l : trap.circuit.layers) {
            if (l.role == LayerRole::Tail) {
                tail_layers++;
                for (const auto &op : l.ops) ASSERT_TRUE(op.rotation.is_clifford());
            }
        }
        ASSERT_EQ(trap.circuit.layers.size(), target.layers.size() + 2 + tail_layers);
        ASSERT_LE(tail_layers, trap.tail.size());
        ASSERT_TRUE(all_zero(noiseless_trap_output(trap)));
        nonempty += !trap.tail.empty();
    }
    ASSERT_GT(nonempty, 0u);
}

TEST(trap_compiler, traps_are_reproducible_from_seed) {
    Rng seed_rng = independent_test_rng();
    LogicalCircuit target = build_iqp(4, 3, seed_rng);
    Rng a(99), b(99);
    TrapPair pa = compile_trap(target, TrapConstruction::Modified, false, a);
    TrapPair pb = compile_trap(target, TrapConstruction::Modified, false, b);
    ASSERT_EQ(pa.first.to_json().dump(), pb.first.to_json().dump());
    ordered_json rec = pa.first.randomization_record();
    ASSERT_EQ(rec["construction"], "modified");
    ASSERT_EQ(rec["w_layers"].size(), pa.first.w_layers.size());
    LogicalCircuit round = circuit_from_json(pa.first.to_json());
    ASSERT_EQ(to_json(round).dump(), to_json(pa.first.circuit).dump());
}

TEST(trap_compiler, malformed_target_is_rejected) {
    LogicalCircuit c;
    c.n = 2;
    c.layers = {GateLayer::entangling({EntanglingOp::cz(0, 1)}, LayerRole::G), GateLayer::measurement(2)};
    Rng rng(1);
    ASSERT_THROW(compile_trap(c, TrapConstruction::Standard, false, rng), std::invalid_argument);
}

TEST(trap_compiler, single_errors_detected_with_probability_half) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(3, 2, rng);
    const uint64_t draws = 2000;
    std::vector<DetectionCell> cells = single_error_detection(target, draws, rng);
    ASSERT_FALSE(cells.empty());
    double worst = 1;
    for (const auto &c : cells) {
        ASSERT_EQ(c.draws, draws);
        ASSERT_GE(c.frequency(), 0.5 - three_sigma(0.5, draws)) << "boundary " << c.boundary << " pauli " << c.pauli;
        worst = std::min(worst, c.frequency());
    }
    // The bound is tight: some error is caught only through the boundary Hadamards.
    ASSERT_LT(worst, 0.6);
}

TEST(trap_compiler, j_layer_error_pairs_cancel_at_most_half) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(2, 3, rng);
    const uint64_t draws = 2000;
    std::vector<size_t> j_after;
    {
        TrapPair p = compile_trap(target, TrapConstruction::Standard, false, rng);
        for (size_t li = 0; li < p.first.circuit.layers.size(); li++) {
            if (p.first.circuit.layers[li].role == LayerRole::J) j_after.push_back(li + 1);
        }
    }
    ASSERT_EQ(j_after.size(), 3u);
    std::vector<uint64_t> cancel(16 * 16 * 9, 0);
    for (uint64_t d = 0; d < draws; d++) {
        TrapPair p = compile_trap(target, TrapConstruction::Standard, false, rng);
        std::vector<CliffordTableau> props = boundary_propagators(p.first.circuit);
        for (size_t a = 0; a < 3; a++) {
            for (size_t b = a + 1; b < 3; b++) {
                for (uint64_t e1 = 1; e1 < 16; e1++) {
                    PauliString f1 = conjugate(props[j_after[a]], local_pauli(e1, 2));
                    for (uint64_t e2 = 1; e2 < 16; e2++) {
                        PauliString f2 = conjugate(props[j_after[b]], local_pauli(e2, 2));
                        cancel[(a * 3 + b) * 256 + e1 * 16 + e2] += f1.same_operator(f2);
                    }
                }
            }
        }
    }
    double worst = 0;
    for (uint64_t c : cancel) worst = std::max(worst, (double)c / draws);
    ASSERT_LE(worst, 0.5 + three_sigma(0.5, draws));
    ASSERT_GT(worst, 0.2);
}

TEST(trap_compiler, frame_shots_on_traps) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(4, 6, rng);
    TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, rng);
    CompiledTrap quiet(pair.first, nisq(0));
    for (int i = 0; i < 100; i++) {
        ShotOutcome o = run_trap_shot(quiet, rng);
        ASSERT_FALSE(o.failed);
        ASSERT_EQ(o.bitstring, std::vector<uint8_t>(4, 0));
    }
    // Frame Monte Carlo against the dense oracle for the same trap and noise.
    NoiseSpec spec = nisq(0.01);
    CompiledTrap noisy(pair.first, spec);
    std::vector<double> dist = exact_output_distribution(pair.first.circuit, &noisy.plan());
    double p_fail = 1 - dist[0];
    const uint64_t shots = 50000;
    ShotStats st = run_shots(noisy.program(), noisy.sampler(), 5, shots, 1);
    ASSERT_NEAR((double)st.failures / shots, p_fail, 4 * std::sqrt(p_fail * (1 - p_fail) / shots));
    std::vector<CompiledTrap> versions;
    versions.emplace_back(pair.first, spec);
    versions.emplace_back(*pair.second, spec);
    uint64_t fails = 0;
    for (int i = 0; i < 20000; i++) fails += run_trap_versions_shot(versions, rng);
    double p_pair = 1 - (1 - p_fail) * (1 - p_fail);
    ASSERT_NEAR(fails / 20000.0, p_pair, 4 * std::sqrt(p_pair * (1 - p_pair) / 20000));
}

TEST(trap_compiler, modified_trap_error_pairs_cancel_at_most_seven_eighths) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(2, 3, rng);
    const uint64_t draws = 2000;
    std::vector<uint64_t> cancel(3 * 3 * 256, 0);
    for (uint64_t d = 0; d < draws; d++) {
        TrapPair p = compile_trap(target, TrapConstruction::Modified, false, rng);
        const LogicalCircuit &c = p.first.circuit;
        std::vector<size_t> j_after;
        for (size_t li = 0; li < c.layers.size(); li++) {
            if (c.layers[li].role == LayerRole::J) j_after.push_back(li + 1);
        }
        ASSERT_EQ(j_after.size(), 3u);
        std::vector<CliffordTableau> props = boundary_propagators(c);
        for (size_t a = 0; a < 3; a++) {
            for (size_t b = a + 1; b < 3; b++) {
                for (uint64_t e1 = 1; e1 < 16; e1++) {
                    PauliString f1 = conjugate(props[j_after[a]], local_pauli(e1, 2));
                    for (uint64_t e2 = 1; e2 < 16; e2++) {
                        PauliString f2 = conjugate(props[j_after[b]], local_pauli(e2, 2));
                        cancel[(a * 3 + b) * 256 + e1 * 16 + e2] += f1.same_operator(f2);
                    }
                }
            }
        }
    }
    double worst = 0;
    for (uint64_t c : cancel) worst = std::max(worst, (double)c / draws);
    ASSERT_LE(worst, 0.875 + three_sigma(0.875, draws));
}
