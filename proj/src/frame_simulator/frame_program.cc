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

#include "lacc/frame_simulator/frame_program.h"

#include <atomic>
#include <bit>
#include <map>
#include <thread>
#include <tuple>

#include "lacc/util/rng.h"

namespace lacc {

namespace {

constexpr uint64_t kChunk = 256;

}  // namespace

uint32_t FrameProgram::add_single_qubit(const std::vector<std::pair<size_t, Clifford1Q>> &gates) {
    size_t base = masks_.size();
    masks_.resize(base + 4 * words_, 0);
    uint64_t *xx = &masks_[base];
    uint64_t *xz = xx + words_;
    uint64_t *zx = xz + words_;
    uint64_t *zz = zx + words_;
    std::vector<uint8_t> touched(n_, 0);
    for (const auto &[q, c] : gates) {
        touched[q] = 1;
        uint64_t bit = uint64_t{1} << (q & 63);
        size_t w = q >> 6;
        SignedPauli1 ix = c.image_x(), iz = c.image_z();
        if (ix.x()) xx[w] |= bit;
        if (ix.z()) xz[w] |= bit;
        if (iz.x()) zx[w] |= bit;
        if (iz.z()) zz[w] |= bit;
    }
    for (size_t q = 0; q < n_; q++) {
        if (!touched[q]) {
            uint64_t bit = uint64_t{1} << (q & 63);
            xx[q >> 6] |= bit;
            zz[q >> 6] |= bit;
        }
    }
    steps_.push_back({StepKind::SingleQubit, (uint32_t)(base / (4 * words_))});
    return (uint32_t)(steps_.size() - 1);
}

FrameProgram FrameProgram::compile(const LogicalCircuit &circuit, const NoisePlan &plan) {
    if (plan.n != circuit.n) {
        throw std::invalid_argument("FrameProgram: noise plan qubit count mismatch");
    }
    FrameProgram p;
    p.n_ = circuit.n;
    p.words_ = (circuit.n + 63) / 64;
    p.flips_ = circuit.measurement_flips();

    using Key = std::tuple<size_t, int32_t, uint32_t>;
    std::map<Key, uint32_t> slot;
    slot[{NoiseLocation::kPrep, -1, 0}] = 0;

    for (size_t li = 0; li < circuit.layers.size(); li++) {
        const GateLayer &layer = circuit.layers[li];
        switch (layer.kind) {
            case LayerKind::SingleQubitClifford: {
                std::vector<std::pair<size_t, Clifford1Q>> gates;
                for (size_t q = 0; q < layer.cliffords.size(); q++) {
                    if (!layer.cliffords[q].is_identity()) {
                        gates.push_back({q, layer.cliffords[q]});
                    }
                }
                if (!gates.empty()) {
                    p.add_single_qubit(gates);
                }
                break;
            }
            case LayerKind::HadamardBoundary:
                if (layer.hadamard) {
                    std::vector<std::pair<size_t, Clifford1Q>> gates;
                    for (size_t q = 0; q < circuit.n; q++) {
                        gates.push_back({q, Clifford1Q::H()});
                    }
                    p.add_single_qubit(gates);
                }
                break;
            case LayerKind::PauliTwirl:
            case LayerKind::Measurement:
                break;
            case LayerKind::Entangling: {
                std::vector<std::pair<uint32_t, uint32_t>> czs;
                std::vector<PauliString> axes;
                for (const auto &op : layer.ops) {
                    if (op.kind == OpKind::CZ) {
                        czs.push_back({(uint32_t)op.qubits[0], (uint32_t)op.qubits[1]});
                    } else if (op.kind == OpKind::Rotation) {
                        if (!op.rotation.is_clifford()) {
                            throw StructuralError("frame simulation reached a non-Clifford rotation in layer " +
                                                  std::to_string(li));
                        }
                        if (op.rotation.quarter_turns() % 2 != 0) {
                            axes.push_back(op.rotation.basis);
                        }
                    }
                }
                if (!czs.empty()) {
                    p.czs_.push_back(std::move(czs));
                    p.steps_.push_back({StepKind::CZ, (uint32_t)(p.czs_.size() - 1)});
                }
                for (auto &a : axes) {
                    p.axes_.push_back(std::move(a));
                    p.steps_.push_back({StepKind::Rotation, (uint32_t)(p.axes_.size() - 1)});
                }
                uint32_t after = (uint32_t)p.steps_.size();
                slot[{li, -1, 0}] = after;
                for (size_t oi = 0; oi < layer.ops.size(); oi++) {
                    slot[{li, (int32_t)oi, 0}] = after;
                }
                for (size_t oi = 0; oi < layer.ops.size(); oi++) {
                    const EntanglingOp &op = layer.ops[oi];
                    for (uint32_t r = 1; r < op.repetitions; r++) {
                        std::vector<std::pair<size_t, Clifford1Q>> w, w_inv;
                        if (!op.inner_sandwich.empty()) {
                            for (size_t i = 0; i < op.qubits.size(); i++) {
                                w.push_back({op.qubits[i], op.inner_sandwich[r - 1][i]});
                                w_inv.push_back({op.qubits[i], op.inner_sandwich[r - 1][i].inverse()});
                            }
                        }
                        p.add_single_qubit(w);
                        slot[{li, (int32_t)oi, r}] = (uint32_t)p.steps_.size();
                        p.add_single_qubit(w_inv);
                    }
                }
                continue;
            }
        }
        slot[{li, -1, 0}] = (uint32_t)p.steps_.size();
    }

    p.loc_step_.reserve(plan.locations.size());
    uint32_t last = 0;
    for (const auto &loc : plan.locations) {
        auto it = slot.find({loc.layer, loc.op, loc.rep});
        if (it == slot.end()) {
            it = slot.find({loc.layer, -1, 0});
        }
        if (it == slot.end()) {
            throw std::invalid_argument("FrameProgram: noise location does not match the circuit");
        }
        if (it->second < last) {
            throw std::invalid_argument("FrameProgram: noise locations are not in program order");
        }
        last = it->second;
        p.loc_step_.push_back(it->second);
        p.loc_qubits_.push_back(loc.qubits);
    }
    return p;
}

void FrameProgram::apply_step(const Step &step, uint64_t *x, uint64_t *z) const {
    switch (step.kind) {
        case StepKind::SingleQubit: {
            const uint64_t *xx = &masks_[(size_t)step.index * 4 * words_];
            const uint64_t *xz = xx + words_;
            const uint64_t *zx = xz + words_;
            const uint64_t *zz = zx + words_;
            for (size_t w = 0; w < words_; w++) {
                uint64_t nx = (x[w] & xx[w]) ^ (z[w] & zx[w]);
                uint64_t nz = (x[w] & xz[w]) ^ (z[w] & zz[w]);
                x[w] = nx;
                z[w] = nz;
            }
            break;
        }
        case StepKind::CZ:
            for (const auto &[a, b] : czs_[step.index]) {
                uint64_t xa = (x[a >> 6] >> (a & 63)) & 1;
                uint64_t xb = (x[b >> 6] >> (b & 63)) & 1;
                z[a >> 6] ^= xb << (a & 63);
                z[b >> 6] ^= xa << (b & 63);
            }
            break;
        case StepKind::Rotation: {
            const PauliString &axis = axes_[step.index];
            size_t parity = 0;
            for (size_t w = 0; w < words_; w++) {
                parity += std::popcount((x[w] & axis.zs()[w]) ^ (z[w] & axis.xs()[w]));
            }
            if (parity & 1) {
                for (size_t w = 0; w < words_; w++) {
                    x[w] ^= axis.xs()[w];
                    z[w] ^= axis.zs()[w];
                }
            }
            break;
        }
    }
}

void FrameProgram::apply_hit(const NoiseHit &hit, uint64_t *x, uint64_t *z) const {
    const auto &qs = loc_qubits_[hit.location];
    uint64_t code = hit.pauli;
    for (size_t i = 0; i < qs.size(); i++, code >>= 2) {
        size_t q = qs[i];
        x[q >> 6] ^= (code & 1) << (q & 63);
        z[q >> 6] ^= ((code >> 1) & 1) << (q & 63);
    }
}

void FrameProgram::propagate_hits(const std::vector<NoiseHit> &hits, uint64_t *x, uint64_t *z) const {
    if (hits.empty()) return;
    size_t h = 0;
    for (size_t s = loc_step_[hits[0].location]; s < steps_.size(); s++) {
        while (h < hits.size() && loc_step_[hits[h].location] == s) {
            apply_hit(hits[h++], x, z);
        }
        apply_step(steps_[s], x, z);
    }
    while (h < hits.size()) {
        apply_hit(hits[h++], x, z);
    }
}

PauliString FrameProgram::final_frame(const std::vector<NoiseHit> &hits) const {
    PauliString frame(n_);
    propagate_hits(hits, frame.xs(), frame.zs());
    return frame;
}

bool FrameProgram::run(const std::vector<NoiseHit> &hits, std::vector<uint8_t> *unflipped_bits) const {
    uint64_t xbuf[16], zbuf[16];
    std::vector<uint64_t> xv, zv;
    uint64_t *x = xbuf, *z = zbuf;
    if (words_ > 16) {
        xv.assign(words_, 0);
        zv.assign(words_, 0);
        x = xv.data();
        z = zv.data();
    } else {
        std::fill(x, x + words_, 0);
        std::fill(z, z + words_, 0);
    }
    propagate_hits(hits, x, z);
    bool failed = false;
    for (size_t w = 0; w < words_; w++) {
        failed |= x[w] != 0;
    }
    if (unflipped_bits != nullptr) {
        unflipped_bits->assign(n_, 0);
        for (size_t q = 0; q < n_; q++) {
            // Raw readout of the twirled circuit is flips ^ frame; undo the flips.
            uint8_t raw = (uint8_t)(flips_[q] ^ ((x[q >> 6] >> (q & 63)) & 1));
            (*unflipped_bits)[q] = raw ^ flips_[q];
        }
    }
    return failed;
}

PauliString FrameProgram::propagate(const std::vector<std::pair<size_t, PauliString>> &errors) const {
    PauliString frame(n_);
    uint64_t *x = frame.xs();
    uint64_t *z = frame.zs();
    std::vector<std::pair<uint32_t, const PauliString *>> order;
    for (const auto &[loc, e] : errors) {
        if (loc >= loc_step_.size() || e.num_qubits() != n_) {
            throw std::invalid_argument("FrameProgram::propagate: bad error location or size");
        }
        order.push_back({loc_step_[loc], &e});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    size_t h = 0;
    for (size_t s = 0; s <= steps_.size(); s++) {
        while (h < order.size() && order[h].first == s) {
            for (size_t w = 0; w < words_; w++) {
                x[w] ^= order[h].second->xs()[w];
                z[w] ^= order[h].second->zs()[w];
            }
            h++;
        }
        if (s < steps_.size()) {
            apply_step(steps_[s], x, z);
        }
    }
    return frame;
}

ShotStats run_shots(const FrameProgram &program, const NoiseSampler &sampler, uint64_t master_seed,
                    uint64_t shots, size_t threads) {
    uint64_t chunks = (shots + kChunk - 1) / kChunk;
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> failures{0};
    auto worker = [&]() {
        std::vector<NoiseHit> hits;
        uint64_t local = 0;
        for (uint64_t c = next++; c < chunks; c = next++) {
            Rng rng(derive_seed(master_seed, c));
            uint64_t end = std::min(shots, (c + 1) * kChunk);
            for (uint64_t s = c * kChunk; s < end; s++) {
                sampler.sample(rng, hits);
                local += program.run(hits);
            }
        }
        failures += local;
    };
    threads = std::max<size_t>(threads, 1);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    return {shots, failures.load()};
}

}  // namespace lacc
