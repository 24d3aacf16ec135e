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

#ifndef LACC_TRAP_COMPILER_TRAP_H
#define LACC_TRAP_COMPILER_TRAP_H

#include <optional>
#include <string>
#include <vector>

#include "lacc/circuit_ir/circuit.h"
#include "lacc/util/rng.h"

namespace lacc {

enum class TrapConstruction { Standard, Modified };

std::string to_string(TrapConstruction c);
TrapConstruction trap_construction_from_string(const std::string &text);

struct TrapOptions {
    /// Cap on repeat-until-success attempts; the geometric tail mass sits on the cap.
    uint32_t rus_max_attempts = 20;
    /// Forces the boundary Hadamard bit instead of drawing it.
    std::optional<bool> force_t;
    /// Modified construction: forces every magic slot to this k.
    std::optional<int> force_k;
};

/// One trap circuit and the randomness that produced it.
struct TrapInstance {
    LogicalCircuit circuit;
    bool t = false;
    /// Randomising layers in circuit order (pre and post of each block).
    std::vector<std::vector<Clifford1Q>> w_layers;
    /// Per CZ in circuit order: 1 when the first qubit is the CNOT control.
    std::vector<uint8_t> cnot_orientation;
    MagicVariant magic_variant = MagicVariant::Pi;
    TrapConstruction construction = TrapConstruction::Standard;
    /// Modified construction: k per magic slot, circuit order.
    std::vector<uint8_t> k_draws;
    /// Modified construction: bases of the -pi/2 correction rotations, in applied order.
    std::vector<PauliString> tail;
    /// Modified construction: number of pi/2 draws that did not stabilise the state.
    size_t non_stabilising = 0;
    std::vector<uint8_t> expected_output;

    ordered_json randomization_record() const;
    /// Circuit JSON plus a "randomization" block.
    ordered_json to_json() const;
};

/// The two jointly scored versions of a trap. Purified and modified traps have one.
struct TrapPair {
    TrapInstance first;
    std::optional<TrapInstance> second;

    size_t size() const {
        return second ? 2 : 1;
    }
    const TrapInstance &operator[](size_t i) const {
        return i == 0 ? first : *second;
    }
};

/// Checks that the target is blocks of (single-qubit, entangling, single-qubit)
/// layers followed by a measurement. Throws std::invalid_argument otherwise.
void validate_target_structure(const LogicalCircuit &target);

/// Marks every magic slot of a target as fed by purified states (two per slot,
/// one discarded by the dummy teleportation).
LogicalCircuit purify_target(const LogicalCircuit &target);

TrapPair compile_trap(const LogicalCircuit &target, TrapConstruction construction, bool purified, Rng &rng,
                      const TrapOptions &options = {});

TrapInstance compile_trap_modified(const LogicalCircuit &target, Rng &rng, const TrapOptions &options = {});

/// Noiseless output of a Clifford trap via stabilizer simulation (-1 marks a random bit).
std::vector<int> noiseless_trap_output(const TrapInstance &trap);

}  // namespace lacc

#endif
