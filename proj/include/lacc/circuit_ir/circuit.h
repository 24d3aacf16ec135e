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

#ifndef LACC_CIRCUIT_IR_CIRCUIT_H
#define LACC_CIRCUIT_IR_CIRCUIT_H

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "lacc/pauli_algebra/clifford_1q.h"
#include "lacc/pauli_algebra/clifford_tableau.h"
#include "lacc/pauli_algebra/pauli_string.h"

namespace lacc {

using ordered_json = nlohmann::ordered_json;

enum class LayerKind { SingleQubitClifford, Entangling, HadamardBoundary, PauliTwirl, Measurement };

/// Position of a layer inside the repeating block structure.
enum class LayerRole { Plain, SPre, SPost, G, W, WInverse, J, Boundary, Tail, Twirl, Measure };

enum class RotationMechanism { GateTeleportation, RUS, ProjectiveMeasurement };

/// Magic state fed into a trap slot.
enum class MagicVariant { None, Pi, PiOver2, Purified };

enum class OpKind { CZ, Rotation, IdentityGadget };

/// R_P(theta) = exp(-i theta P / 2), fed by the magic state |theta>.
struct RotationGate {
    PauliString basis;
    double angle = 0;
    RotationMechanism mechanism = RotationMechanism::GateTeleportation;

    /// Exponent a in exp(-i a P); equals angle / 2.
    double exponent() const {
        return angle / 2;
    }
    bool is_clifford() const;
    /// Number of exp(-i pi/4 P) factors; only meaningful when is_clifford().
    int quarter_turns() const;
};

struct EntanglingOp {
    OpKind kind = OpKind::CZ;
    /// CZ: the two qubits. Rotation and gadget: support of the basis.
    std::vector<size_t> qubits;
    RotationGate rotation;
    /// Consumes magic states (noise charged at the magic-gate rate).
    bool magic = false;
    /// Magic states consumed per attempt.
    uint32_t magic_states = 1;
    MagicVariant variant = MagicVariant::None;
    /// Attempts made (RUS), 1 otherwise.
    uint32_t repetitions = 1;
    /// Randomising Cliffords around attempts 2..repetitions, one per qubit in `qubits`.
    std::vector<std::vector<Clifford1Q>> inner_sandwich;
    /// Modified trap construction: magic state |k pi/2> (0 when unused).
    int k = 0;

    static EntanglingOp cz(size_t a, size_t b);
    static EntanglingOp rotation_op(const RotationGate &gate, bool magic);
};

struct GateLayer {
    LayerKind kind = LayerKind::SingleQubitClifford;
    LayerRole role = LayerRole::Plain;
    std::vector<Clifford1Q> cliffords;
    std::vector<EntanglingOp> ops;
    bool hadamard = false;
    PauliString twirl;
    std::vector<uint8_t> flips;

    static GateLayer single_qubit(std::vector<Clifford1Q> gates, LayerRole role);
    static GateLayer identity(size_t n, LayerRole role);
    static GateLayer entangling(std::vector<EntanglingOp> ops, LayerRole role);
    static GateLayer hadamard_boundary(size_t n, bool t);
    static GateLayer pauli_twirl(PauliString p);
    static GateLayer measurement(size_t n);

    bool is_clifford() const;
};

struct LogicalCircuit {
    size_t n = 0;
    std::vector<GateLayer> layers;
    ordered_json metadata = ordered_json::object();

    /// Throws std::invalid_argument describing the first structural violation.
    void validate() const;
    bool is_clifford() const;
    /// Non-Clifford rotation slots (each consuming magic states).
    size_t magic_slot_count() const;
    size_t magic_state_count() const;
    /// Number of pi/4 rotations.
    size_t t_count() const;
    /// Tableau of the whole circuit excluding measurement; requires is_clifford().
    CliffordTableau tableau() const;
    /// Measurement flip mask of the final layer.
    std::vector<uint8_t> measurement_flips() const;
};

/// Appends the Clifford action of one layer to a tableau. Throws for non-Clifford content.
void append_layer(CliffordTableau &tableau, const GateLayer &layer);

std::string to_string(LayerKind kind);
std::string to_string(LayerRole role);
std::string to_string(RotationMechanism mechanism);
std::string to_string(MagicVariant variant);
std::string to_string(OpKind kind);
LayerKind layer_kind_from_string(const std::string &s);
LayerRole layer_role_from_string(const std::string &s);
RotationMechanism mechanism_from_string(const std::string &s);
MagicVariant magic_variant_from_string(const std::string &s);
OpKind op_kind_from_string(const std::string &s);

ordered_json to_json(const GateLayer &layer);
ordered_json to_json(const LogicalCircuit &circuit);
LogicalCircuit circuit_from_json(const ordered_json &j);

}  // namespace lacc

#endif
