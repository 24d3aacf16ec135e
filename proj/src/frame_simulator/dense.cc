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

#include "lacc/frame_simulator/dense.h"

#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace lacc {

namespace {

using cd = std::complex<double>;

struct PauliMasks {
    uint64_t x = 0, z = 0;
    cd phase = 1;  // P = phase * X^x Z^z
};

PauliMasks masks_of(const PauliString &p) {
    PauliMasks m;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if (p.x(q)) m.x |= uint64_t{1} << q;
        if (p.z(q)) m.z |= uint64_t{1} << q;
    }
    static const cd powers[4] = {1, cd(0, 1), -1, cd(0, -1)};
    m.phase = powers[p.count_y() & 3] * (double)p.sign();
    return m;
}

double parity_sign(uint64_t v) {
    return (std::popcount(v) & 1) ? -1.0 : 1.0;
}

Eigen::Matrix2cd clifford_unitary(Clifford1Q c) {
    auto u = c.unitary();
    Eigen::Matrix2cd m;
    m << u[0], u[1], u[2], u[3];
    return m;
}

}  // namespace

Eigen::MatrixXcd dense_pauli_matrix(const PauliString &p) {
    PauliMasks m = masks_of(p);
    Eigen::Index d = Eigen::Index{1} << p.num_qubits();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    // P = phase X^x Z^z maps |j> to phase (-1)^{j.z} |j ^ x>.
    for (Eigen::Index j = 0; j < d; j++) {
        out((Eigen::Index)((uint64_t)j ^ m.x), j) = m.phase * parity_sign((uint64_t)j & m.z);
    }
    return out;
}

DenseState dense_conjugate_pauli(const DenseState &rho, const PauliString &p) {
    PauliMasks m = masks_of(p);
    Eigen::Index d = rho.rows();
    DenseState out(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        uint64_t si = (uint64_t)i ^ m.x;
        double wi = parity_sign(si & m.z);
        for (Eigen::Index j = 0; j < d; j++) {
            uint64_t sj = (uint64_t)j ^ m.x;
            out(i, j) = wi * parity_sign(sj & m.z) * rho((Eigen::Index)si, (Eigen::Index)sj);
        }
    }
    return out;
}

void dense_apply_pauli_channel(DenseState &rho, const StochasticPauliChannel &channel) {
    size_t n = (size_t)std::countr_zero((uint64_t)rho.rows());
    if (channel.total_error_rate() == 0) {
        return;
    }
    DenseState out = channel.channel.probability(0) * rho;
    for (uint64_t k = 1; k < channel.channel.num_outcomes(); k++) {
        double p = channel.channel.probability(k);
        if (p > 0) {
            out += p * dense_conjugate_pauli(rho, embed_pauli(k, channel.support, n));
        }
    }
    rho = out;
}

void dense_apply_pauli_rotation(DenseState &rho, const PauliString &basis, double angle) {
    // exp(-i a P) rho exp(i a P) = c^2 rho + s^2 P rho P + i c s (rho P - P rho), a = angle / 2.
    double c = std::cos(angle / 2), s = std::sin(angle / 2);
    PauliMasks m = masks_of(basis);
    Eigen::Index d = rho.rows();
    DenseState rp(d, d), pr(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            // (rho P)_{ij} = rho_{i, j^x} w(j);  (P rho)_{ij} = w(i^x) rho_{i^x, j}; w(k) = phase (-1)^{k.z}.
            uint64_t jx = (uint64_t)j ^ m.x;
            uint64_t ix = (uint64_t)i ^ m.x;
            rp(i, j) = rho(i, (Eigen::Index)jx) * m.phase * parity_sign((uint64_t)j & m.z);
            pr(i, j) = m.phase * parity_sign(ix & m.z) * rho((Eigen::Index)ix, j);
        }
    }
    DenseState prp = dense_conjugate_pauli(rho, basis);
    rho = c * c * rho + s * s * prp + cd(0, c * s) * (rp - pr);
}

void dense_apply_1q(DenseState &rho, size_t q, const Eigen::Matrix2cd &u) {
    Eigen::Index d = rho.rows();
    Eigen::Index bit = Eigen::Index{1} << q;
    // Left multiply.
    for (Eigen::Index i = 0; i < d; i++) {
        if (i & bit) continue;
        for (Eigen::Index j = 0; j < d; j++) {
            cd a = rho(i, j), b = rho(i | bit, j);
            rho(i, j) = u(0, 0) * a + u(0, 1) * b;
            rho(i | bit, j) = u(1, 0) * a + u(1, 1) * b;
        }
    }
    // Right multiply by u^dagger.
    for (Eigen::Index j = 0; j < d; j++) {
        if (j & bit) continue;
        for (Eigen::Index i = 0; i < d; i++) {
            cd a = rho(i, j), b = rho(i, j | bit);
            rho(i, j) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
            rho(i, j | bit) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
        }
    }
}

void dense_apply_cz(DenseState &rho, size_t a, size_t b) {
    Eigen::Index d = rho.rows();
    auto s = [&](Eigen::Index k) { return (((k >> a) & 1) && ((k >> b) & 1)) ? -1.0 : 1.0; };
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            rho(i, j) *= s(i) * s(j);
        }
    }
}

DenseState dense_output_state(const LogicalCircuit &circuit, const NoisePlan *plan, const DenseOptions &options) {
    size_t n = circuit.n;
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("dense simulation is capped at " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    if (plan != nullptr && plan->n != n) {
        throw std::invalid_argument("dense simulation: noise plan qubit count mismatch");
    }
    Eigen::Index d = Eigen::Index{1} << n;
    DenseState rho = DenseState::Zero(d, d);
    rho(0, 0) = 1;

    // Group plan locations by (layer, op, rep) in program order.
    std::map<std::tuple<size_t, int32_t, uint32_t>, std::vector<size_t>> at;
    if (plan != nullptr) {
        for (size_t i = 0; i < plan->locations.size(); i++) {
            const auto &loc = plan->locations[i];
            at[{loc.layer, loc.op, loc.rep}].push_back(i);
        }
    }
    auto apply_locations = [&](size_t layer, int32_t op, uint32_t rep, bool rus) {
        auto it = at.find({layer, op, rep});
        if (it == at.end()) {
            return;
        }
        for (size_t i : it->second) {
            StochasticPauliChannel ch = plan->placed(i);
            if (!rus) {
                dense_apply_pauli_channel(rho, ch);
                continue;
            }
            // Attempts r >= 1 with probability 2^-r; the tail mass sits on the cap.
            DenseState mix = DenseState::Zero(d, d);
            DenseState cur = rho;
            double remaining = 1;
            for (uint32_t r = 1; r <= options.rus_max_attempts; r++) {
                dense_apply_pauli_channel(cur, ch);
                double w = r == options.rus_max_attempts ? remaining : std::ldexp(1.0, -(int)r);
                mix += w * cur;
                remaining -= w;
            }
            rho = mix;
        }
    };

    apply_locations(NoiseLocation::kPrep, -1, 0, false);
    for (size_t li = 0; li < circuit.layers.size(); li++) {
        const GateLayer &layer = circuit.layers[li];
        switch (layer.kind) {
            case LayerKind::SingleQubitClifford:
                for (size_t q = 0; q < n; q++) {
                    if (!layer.cliffords[q].is_identity()) {
                        dense_apply_1q(rho, q, clifford_unitary(layer.cliffords[q]));
                    }
                }
                apply_locations(li, -1, 0, false);
                break;
            case LayerKind::HadamardBoundary:
                if (layer.hadamard) {
                    for (size_t q = 0; q < n; q++) {
                        dense_apply_1q(rho, q, clifford_unitary(Clifford1Q::H()));
                    }
                }
                apply_locations(li, -1, 0, false);
                break;
            case LayerKind::PauliTwirl:
                rho = dense_conjugate_pauli(rho, layer.twirl);
                break;
            case LayerKind::Measurement:
                apply_locations(li, -1, 0, false);
                break;
            case LayerKind::Entangling: {
                for (const auto &op : layer.ops) {
                    if (op.kind == OpKind::CZ) {
                        dense_apply_cz(rho, op.qubits[0], op.qubits[1]);
                    } else if (op.kind == OpKind::Rotation) {
                        dense_apply_pauli_rotation(rho, op.rotation.basis, op.rotation.angle);
                    }
                }
                for (size_t oi = 0; oi < layer.ops.size(); oi++) {
                    const EntanglingOp &op = layer.ops[oi];
                    bool rus = options.rus_mixture && op.kind == OpKind::Rotation &&
                               op.rotation.mechanism == RotationMechanism::RUS && op.repetitions == 1;
                    apply_locations(li, (int32_t)oi, 0, rus);
                }
                apply_locations(li, -1, 0, false);
                for (size_t oi = 0; oi < layer.ops.size(); oi++) {
                    const EntanglingOp &op = layer.ops[oi];
                    for (uint32_t r = 1; r < op.repetitions; r++) {
                        if (!op.inner_sandwich.empty()) {
                            for (size_t i = 0; i < op.qubits.size(); i++) {
                                dense_apply_1q(rho, op.qubits[i], clifford_unitary(op.inner_sandwich[r - 1][i]));
                            }
                        }
                        apply_locations(li, (int32_t)oi, r, false);
                        if (!op.inner_sandwich.empty()) {
                            for (size_t i = 0; i < op.qubits.size(); i++) {
                                dense_apply_1q(rho, op.qubits[i],
                                               clifford_unitary(op.inner_sandwich[r - 1][i].inverse()));
                            }
                        }
                    }
                }
                break;
            }
        }
    }
    return rho;
}

std::vector<double> measurement_distribution(const DenseState &rho, const std::vector<uint8_t> &flips) {
    uint64_t mask = 0;
    for (size_t q = 0; q < flips.size(); q++) {
        if (flips[q]) mask |= uint64_t{1} << q;
    }
    std::vector<double> out((size_t)rho.rows());
    for (size_t s = 0; s < out.size(); s++) {
        out[s] = std::max(0.0, rho((Eigen::Index)(s ^ mask), (Eigen::Index)(s ^ mask)).real());
    }
    return out;
}

std::vector<double> exact_output_distribution(const LogicalCircuit &circuit, const NoisePlan *plan,
                                              const DenseOptions &options) {
    return measurement_distribution(dense_output_state(circuit, plan, options), circuit.measurement_flips());
}

}  // namespace lacc
