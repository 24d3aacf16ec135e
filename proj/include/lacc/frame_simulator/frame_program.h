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

#ifndef LACC_FRAME_SIMULATOR_FRAME_PROGRAM_H
#define LACC_FRAME_SIMULATOR_FRAME_PROGRAM_H

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lacc/circuit_ir/circuit.h"
#include "lacc/noise_models/noise_plan.h"
#include "lacc/noise_models/sampler.h"

namespace lacc {

/// Raised when a circuit handed to the frame simulator contains non-Clifford content.
class StructuralError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Clifford circuit compiled for Pauli-frame propagation of sampled errors.
///
/// Gates are grouped into word-parallel single-qubit steps, CZ lists and
/// quarter-turn Pauli rotations. Each noise location is attached to the step
/// it precedes, so a shot starts propagating at its first error.
class FrameProgram {
   public:
    static FrameProgram compile(const LogicalCircuit &circuit, const NoisePlan &plan);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_locations() const {
        return loc_step_.size();
    }
    const std::vector<uint8_t> &flips() const {
        return flips_;
    }

    /// Propagates the sampled errors; returns true when any output bit differs
    /// from the noiseless value. `unflipped_bits` receives the output after the
    /// measurement mask is undone.
    bool run(const std::vector<NoiseHit> &hits, std::vector<uint8_t> *unflipped_bits = nullptr) const;

    /// Frame left at measurement by sampled errors, sign ignored.
    PauliString final_frame(const std::vector<NoiseHit> &hits) const;

    /// Final frame produced by explicit errors (n-qubit Paulis) at the given locations.
    PauliString propagate(const std::vector<std::pair<size_t, PauliString>> &errors) const;

   private:
    enum class StepKind : uint8_t { SingleQubit, CZ, Rotation };
    struct Step {
        StepKind kind;
        uint32_t index;
    };

    void propagate_hits(const std::vector<NoiseHit> &hits, uint64_t *x, uint64_t *z) const;
    void apply_step(const Step &step, uint64_t *x, uint64_t *z) const;
    void apply_hit(const NoiseHit &hit, uint64_t *x, uint64_t *z) const;
    uint32_t add_single_qubit(const std::vector<std::pair<size_t, Clifford1Q>> &gates);

    size_t n_ = 0;
    size_t words_ = 0;
    std::vector<Step> steps_;
    std::vector<uint64_t> masks_;  // 4 * words_ per single-qubit step: XX, XZ, ZX, ZZ
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> czs_;
    std::vector<PauliString> axes_;
    std::vector<uint32_t> loc_step_;
    std::vector<std::vector<size_t>> loc_qubits_;
    std::vector<uint8_t> flips_;
};

struct ShotStats {
    uint64_t shots = 0;
    uint64_t failures = 0;
};

/// Runs shots in parallel. Shots are grouped into fixed chunks, each with its
/// own RNG stream derived from master_seed, so the result does not depend on
/// the thread count.
ShotStats run_shots(const FrameProgram &program, const NoiseSampler &sampler, uint64_t master_seed,
                    uint64_t shots, size_t threads = 1);

}  // namespace lacc

#endif
