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

#include "lacc/circuit_ir/builders.h"

#include <spdlog/spdlog.h>

#include <cmath>
#include <stdexcept>

namespace lacc {

namespace {

enum Diag { kI, kS, kSDag, kZ, kT };

Clifford1Q diag_clifford(int d) {
    switch (d) {
        case kS:
            return Clifford1Q::S();
        case kSDag:
            return Clifford1Q::S_DAG();
        case kZ:
            return Clifford1Q::Z();
        default:
            return Clifford1Q::I();
    }
}

}  // namespace

LogicalCircuit build_iqp(size_t n, size_t depth, Rng &rng, const IqpOptions &options) {
    if (n < 1) {
        throw std::invalid_argument("build_iqp: n must be at least 1");
    }
    if (depth < 1) {
        throw std::invalid_argument("build_iqp: depth must be at least 1");
    }
    if (!(options.cz_density >= 0 && options.cz_density <= 1)) {
        throw std::invalid_argument("build_iqp: cz_density must lie in [0, 1]");
    }
    LogicalCircuit c;
    c.n = n;
    size_t t_slots = 0;
    size_t cz_count = 0;
    for (size_t k = 0; k < depth; k++) {
        if (k == 0) {
            c.layers.push_back(GateLayer::single_qubit(std::vector<Clifford1Q>(n, Clifford1Q::H()), LayerRole::SPre));
        } else {
            c.layers.push_back(GateLayer::identity(n, LayerRole::SPre));
        }
        std::vector<int> draws(n);
        std::vector<size_t> free_qubits;
        std::vector<EntanglingOp> ops;
        for (size_t q = 0; q < n; q++) {
            draws[q] = (int)rng.below(5);
            if (draws[q] == kT) {
                PauliString basis = PauliString::single(n, q, 'Z');
                ops.push_back(EntanglingOp::rotation_op(
                    RotationGate{basis, M_PI / 4, RotationMechanism::GateTeleportation}, true));
                t_slots++;
            } else {
                free_qubits.push_back(q);
            }
        }
        rng.shuffle(free_qubits);
        for (size_t i = 0; i + 1 < free_qubits.size(); i += 2) {
            if (options.cz_density >= 1 || rng.bernoulli(options.cz_density)) {
                size_t a = std::min(free_qubits[i], free_qubits[i + 1]);
                size_t b = std::max(free_qubits[i], free_qubits[i + 1]);
                ops.push_back(EntanglingOp::cz(a, b));
                cz_count++;
            }
        }
        c.layers.push_back(GateLayer::entangling(std::move(ops), LayerRole::G));
        std::vector<Clifford1Q> post(n);
        for (size_t q = 0; q < n; q++) {
            post[q] = diag_clifford(draws[q]);
            if (k + 1 == depth) {
                post[q] = post[q].then(Clifford1Q::H());
            }
        }
        c.layers.push_back(GateLayer::single_qubit(std::move(post), LayerRole::SPost));
    }
    c.layers.push_back(GateLayer::measurement(n));
    c.metadata["builder"] = "iqp";
    c.metadata["n"] = n;
    c.metadata["depth"] = depth;
    c.metadata["cz_density"] = options.cz_density;
    c.metadata["t_count"] = t_slots;
    c.metadata["cz_count"] = cz_count;
    c.validate();
    return c;
}

LogicalCircuit build_trotter(const std::vector<HamiltonianTerm> &terms, double t, size_t steps,
                             const TrotterOptions &options) {
    if (steps < 1) {
        throw std::invalid_argument("build_trotter: step count must be at least 1");
    }
    if (terms.empty()) {
        throw std::invalid_argument("build_trotter: empty Hamiltonian");
    }
    size_t n = terms.front().pauli.num_qubits();
    std::vector<HamiltonianTerm> kept;
    for (const auto &term : terms) {
        if (term.pauli.num_qubits() != n) {
            throw std::invalid_argument("build_trotter: terms act on different qubit counts");
        }
        if (term.pauli.is_identity()) {
            throw std::invalid_argument("build_trotter: identity term");
        }
        if (term.coefficient == 0) {
            spdlog::warn("build_trotter: dropping zero-coefficient term {}", term.pauli.str());
            continue;
        }
        kept.push_back(term);
    }
    if (kept.empty()) {
        throw std::invalid_argument("build_trotter: all terms have zero coefficient");
    }

    std::vector<RotationGate> sequence;
    for (size_t s = 0; s < steps; s++) {
        for (size_t i = 0; i < kept.size(); i++) {
            sequence.push_back({kept[i].pauli, kept[i].coefficient * t / (double)steps, options.mechanism});
        }
        for (size_t i = kept.size(); i-- > 0;) {
            sequence.push_back({kept[i].pauli, kept[i].coefficient * t / (double)steps, options.mechanism});
        }
    }

    std::vector<std::vector<EntanglingOp>> g_layers;
    if (options.pack) {
        std::vector<size_t> next_free(n, 0);
        for (const auto &r : sequence) {
            size_t slot = 0;
            for (size_t q : r.basis.support()) {
                slot = std::max(slot, next_free[q]);
            }
            if (slot == g_layers.size()) {
                g_layers.emplace_back();
            }
            g_layers[slot].push_back(EntanglingOp::rotation_op(r, !r.is_clifford()));
            for (size_t q : r.basis.support()) {
                next_free[q] = slot + 1;
            }
        }
    } else {
        for (const auto &r : sequence) {
            g_layers.push_back({EntanglingOp::rotation_op(r, !r.is_clifford())});
        }
    }

    LogicalCircuit c;
    c.n = n;
    for (auto &ops : g_layers) {
        c.layers.push_back(GateLayer::identity(n, LayerRole::SPre));
        c.layers.push_back(GateLayer::entangling(std::move(ops), LayerRole::G));
        c.layers.push_back(GateLayer::identity(n, LayerRole::SPost));
    }
    c.layers.push_back(GateLayer::measurement(n));
    c.metadata["builder"] = "trotter";
    c.metadata["n"] = n;
    c.metadata["terms"] = kept.size();
    c.metadata["steps"] = steps;
    c.metadata["time"] = t;
    c.metadata["mechanism"] = to_string(options.mechanism);
    c.metadata["packed"] = options.pack;
    c.metadata["rotation_layers"] = g_layers.size();
    c.validate();
    return c;
}

std::vector<HamiltonianTerm> heisenberg_chain(size_t sites, double coupling, double field, Rng &rng) {
    if (sites < 1) {
        throw std::invalid_argument("heisenberg_chain: need at least one site");
    }
    if (field < 0) {
        throw std::invalid_argument("heisenberg_chain: field strength must be nonnegative");
    }
    std::vector<HamiltonianTerm> terms;
    for (size_t i = 0; i + 1 < sites; i++) {
        for (char p : {'X', 'Y', 'Z'}) {
            PauliString term(sites);
            term.set(i, p);
            term.set(i + 1, p);
            terms.push_back({coupling, term});
        }
    }
    for (size_t i = 0; i < sites; i++) {
        double h = field * (2 * rng.uniform() - 1);
        terms.push_back({h, PauliString::single(sites, i, 'Z')});
    }
    return terms;
}

LogicalCircuit resize_blocks(const LogicalCircuit &circuit, size_t blocks) {
    if (blocks < 1) {
        throw std::invalid_argument("resize_blocks: need at least one block");
    }
    size_t body = circuit.layers.size() - 1;
    if (circuit.layers.empty() || body % 3 != 0 || body == 0) {
        throw std::invalid_argument("resize_blocks: circuit does not have the block structure");
    }
    size_t have = body / 3;
    LogicalCircuit out;
    out.n = circuit.n;
    for (size_t k = 0; k < blocks; k++) {
        size_t src = k % have;
        for (size_t j = 0; j < 3; j++) {
            out.layers.push_back(circuit.layers[3 * src + j]);
        }
    }
    out.layers.push_back(circuit.layers.back());
    out.metadata = circuit.metadata;
    out.metadata["blocks"] = blocks;
    out.metadata["resized_from_blocks"] = have;
    out.validate();
    return out;
}

double trotter_error_bound(double w, double t) {
    if (!(w >= 0)) {
        throw std::invalid_argument("trotter_error_bound: w must be nonnegative");
    }
    return w * t * t * t;
}

double rus_expected_attempts() {
    return 2.0;
}

}  // namespace lacc
