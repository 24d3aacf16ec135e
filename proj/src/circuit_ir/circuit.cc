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

#include "lacc/circuit_ir/circuit.h"

#include <cmath>
#include <stdexcept>

namespace lacc {

namespace {

constexpr double kAngleTol = 1e-9;

bool is_multiple_of(double angle, double unit) {
    double r = angle / unit;
    return std::abs(r - std::round(r)) < kAngleTol;
}

template <typename E>
E lookup(const std::string &s, const std::vector<std::pair<E, const char *>> &table, const char *what) {
    for (const auto &[e, name] : table) {
        if (s == name) {
            return e;
        }
    }
    throw std::invalid_argument(std::string("unknown ") + what + " '" + s + "'");
}

const std::vector<std::pair<LayerKind, const char *>> kKinds = {
    {LayerKind::SingleQubitClifford, "SingleQubitClifford"},
    {LayerKind::Entangling, "Entangling"},
    {LayerKind::HadamardBoundary, "HadamardBoundary"},
    {LayerKind::PauliTwirl, "PauliTwirl"},
    {LayerKind::Measurement, "Measurement"},
};
const std::vector<std::pair<LayerRole, const char *>> kRoles = {
    {LayerRole::Plain, "plain"}, {LayerRole::SPre, "S_pre"},       {LayerRole::SPost, "S_post"},
    {LayerRole::G, "G"},         {LayerRole::W, "W"},              {LayerRole::WInverse, "W_inv"},
    {LayerRole::J, "J"},         {LayerRole::Boundary, "boundary"}, {LayerRole::Tail, "tail"},
    {LayerRole::Twirl, "twirl"}, {LayerRole::Measure, "measure"},
};
const std::vector<std::pair<RotationMechanism, const char *>> kMechanisms = {
    {RotationMechanism::GateTeleportation, "GateTeleportation"},
    {RotationMechanism::RUS, "RUS"},
    {RotationMechanism::ProjectiveMeasurement, "ProjectiveMeasurement"},
};
const std::vector<std::pair<MagicVariant, const char *>> kVariants = {
    {MagicVariant::None, "None"},
    {MagicVariant::Pi, "Pi"},
    {MagicVariant::PiOver2, "PiOver2"},
    {MagicVariant::Purified, "Purified"},
};
const std::vector<std::pair<OpKind, const char *>> kOps = {
    {OpKind::CZ, "CZ"},
    {OpKind::Rotation, "Rotation"},
    {OpKind::IdentityGadget, "IdentityGadget"},
};

template <typename E>
std::string name_of(E e, const std::vector<std::pair<E, const char *>> &table) {
    for (const auto &[k, name] : table) {
        if (k == e) {
            return name;
        }
    }
    return "?";
}

void validate_op(const EntanglingOp &op, size_t n, std::vector<uint8_t> &used) {
    auto claim = [&](size_t q) {
        if (q >= n) {
            throw std::invalid_argument("entangling op acts on qubit out of range");
        }
        if (used[q]) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " acted on twice in one layer");
        }
        used[q] = 1;
    };
    if (op.kind == OpKind::CZ) {
        if (op.qubits.size() != 2 || op.qubits[0] == op.qubits[1]) {
            throw std::invalid_argument("CZ needs two distinct qubits");
        }
        claim(op.qubits[0]);
        claim(op.qubits[1]);
        return;
    }
    const RotationGate &r = op.rotation;
    if (r.basis.num_qubits() != n) {
        throw std::invalid_argument("rotation basis has wrong qubit count");
    }
    if (r.basis.is_identity()) {
        throw std::invalid_argument("rotation basis must be a non-identity Pauli");
    }
    if (r.mechanism == RotationMechanism::GateTeleportation && !is_multiple_of(r.angle, M_PI / 4)) {
        throw std::invalid_argument("gate teleportation requires an angle that is a multiple of pi/4");
    }
    if (op.qubits != r.basis.support()) {
        throw std::invalid_argument("rotation qubits must equal the basis support");
    }
    if (op.repetitions < 1) {
        throw std::invalid_argument("rotation needs at least one attempt");
    }
    if (!op.inner_sandwich.empty()) {
        if (op.inner_sandwich.size() != op.repetitions - 1) {
            throw std::invalid_argument("inner sandwich count must equal repetitions - 1");
        }
        for (const auto &s : op.inner_sandwich) {
            if (s.size() != op.qubits.size()) {
                throw std::invalid_argument("inner sandwich size must equal the support size");
            }
        }
    }
    for (size_t q : op.qubits) {
        claim(q);
    }
}

}  // namespace

bool RotationGate::is_clifford() const {
    return is_multiple_of(angle, M_PI / 2);
}

int RotationGate::quarter_turns() const {
    return (int)std::lround(angle / (M_PI / 2));
}

EntanglingOp EntanglingOp::cz(size_t a, size_t b) {
    EntanglingOp op;
    op.kind = OpKind::CZ;
    op.qubits = {a, b};
    return op;
}

EntanglingOp EntanglingOp::rotation_op(const RotationGate &gate, bool magic) {
    EntanglingOp op;
    op.kind = OpKind::Rotation;
    op.rotation = gate;
    op.qubits = gate.basis.support();
    op.magic = magic;
    return op;
}

GateLayer GateLayer::single_qubit(std::vector<Clifford1Q> gates, LayerRole role) {
    GateLayer layer;
    layer.kind = LayerKind::SingleQubitClifford;
    layer.role = role;
    layer.cliffords = std::move(gates);
    return layer;
}

GateLayer GateLayer::identity(size_t n, LayerRole role) {
    return single_qubit(std::vector<Clifford1Q>(n), role);
}

GateLayer GateLayer::entangling(std::vector<EntanglingOp> ops, LayerRole role) {
    GateLayer layer;
    layer.kind = LayerKind::Entangling;
    layer.role = role;
    layer.ops = std::move(ops);
    return layer;
}

GateLayer GateLayer::hadamard_boundary(size_t, bool t) {
    GateLayer layer;
    layer.kind = LayerKind::HadamardBoundary;
    layer.role = LayerRole::Boundary;
    layer.hadamard = t;
    return layer;
}

GateLayer GateLayer::pauli_twirl(PauliString p) {
    GateLayer layer;
    layer.kind = LayerKind::PauliTwirl;
    layer.role = LayerRole::Twirl;
    layer.twirl = std::move(p);
    return layer;
}

GateLayer GateLayer::measurement(size_t n) {
    GateLayer layer;
    layer.kind = LayerKind::Measurement;
    layer.role = LayerRole::Measure;
    layer.flips.assign(n, 0);
    return layer;
}

bool GateLayer::is_clifford() const {
    if (kind != LayerKind::Entangling) {
        return true;
    }
    for (const auto &op : ops) {
        if (op.kind == OpKind::Rotation && !op.rotation.is_clifford()) {
            return false;
        }
    }
    return true;
}

void LogicalCircuit::validate() const {
    if (n == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    if (layers.empty() || layers.back().kind != LayerKind::Measurement) {
        throw std::invalid_argument("circuit must end with a measurement layer");
    }
    for (size_t i = 0; i < layers.size(); i++) {
        const GateLayer &layer = layers[i];
        std::string where = "layer " + std::to_string(i) + ": ";
        try {
            switch (layer.kind) {
                case LayerKind::SingleQubitClifford:
                    if (layer.cliffords.size() != n) {
                        throw std::invalid_argument("single-qubit layer must assign a gate to every qubit");
                    }
                    break;
                case LayerKind::Entangling: {
                    std::vector<uint8_t> used(n, 0);
                    for (const auto &op : layer.ops) {
                        validate_op(op, n, used);
                    }
                    break;
                }
                case LayerKind::HadamardBoundary:
                    break;
                case LayerKind::PauliTwirl:
                    if (layer.twirl.num_qubits() != n) {
                        throw std::invalid_argument("twirl has wrong qubit count");
                    }
                    break;
                case LayerKind::Measurement:
                    if (i + 1 != layers.size()) {
                        throw std::invalid_argument("measurement must be the final layer");
                    }
                    if (layer.flips.size() != n) {
                        throw std::invalid_argument("measurement flip mask has wrong size");
                    }
                    break;
            }
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(where + e.what());
        }
    }
}

bool LogicalCircuit::is_clifford() const {
    for (const auto &layer : layers) {
        if (!layer.is_clifford()) {
            return false;
        }
    }
    return true;
}

size_t LogicalCircuit::magic_slot_count() const {
    size_t total = 0;
    for (const auto &layer : layers) {
        for (const auto &op : layer.ops) {
            total += op.magic ? 1 : 0;
        }
    }
    return total;
}

size_t LogicalCircuit::magic_state_count() const {
    size_t total = 0;
    for (const auto &layer : layers) {
        for (const auto &op : layer.ops) {
            if (op.magic) {
                total += (size_t)op.magic_states * op.repetitions;
            }
        }
    }
    return total;
}

size_t LogicalCircuit::t_count() const {
    size_t total = 0;
    for (const auto &layer : layers) {
        for (const auto &op : layer.ops) {
            if (op.kind == OpKind::Rotation && is_multiple_of(op.rotation.angle, M_PI / 4) &&
                !op.rotation.is_clifford()) {
                total++;
            }
        }
    }
    return total;
}

void append_layer(CliffordTableau &tableau, const GateLayer &layer) {
    switch (layer.kind) {
        case LayerKind::SingleQubitClifford:
            for (size_t q = 0; q < layer.cliffords.size(); q++) {
                if (!layer.cliffords[q].is_identity()) {
                    tableau.append_1q(q, layer.cliffords[q]);
                }
            }
            break;
        case LayerKind::Entangling:
            for (const auto &op : layer.ops) {
                if (op.kind == OpKind::CZ) {
                    tableau.append_cz(op.qubits[0], op.qubits[1]);
                } else if (op.kind == OpKind::Rotation) {
                    if (!op.rotation.is_clifford()) {
                        throw std::invalid_argument("non-Clifford rotation has no tableau");
                    }
                    tableau.append_quarter_rotation(op.rotation.basis, op.rotation.quarter_turns());
                }
            }
            break;
        case LayerKind::HadamardBoundary:
            if (layer.hadamard) {
                for (size_t q = 0; q < tableau.num_qubits(); q++) {
                    tableau.append_h(q);
                }
            }
            break;
        case LayerKind::PauliTwirl:
            tableau.append_pauli(layer.twirl);
            break;
        case LayerKind::Measurement:
            break;
    }
}

CliffordTableau LogicalCircuit::tableau() const {
    CliffordTableau t(n);
    for (const auto &layer : layers) {
        append_layer(t, layer);
    }
    return t;
}

std::vector<uint8_t> LogicalCircuit::measurement_flips() const {
    if (layers.empty() || layers.back().kind != LayerKind::Measurement) {
        return std::vector<uint8_t>(n, 0);
    }
    return layers.back().flips;
}

std::string to_string(LayerKind kind) {
    return name_of(kind, kKinds);
}
std::string to_string(LayerRole role) {
    return name_of(role, kRoles);
}
std::string to_string(RotationMechanism mechanism) {
    return name_of(mechanism, kMechanisms);
}
std::string to_string(MagicVariant variant) {
    return name_of(variant, kVariants);
}
std::string to_string(OpKind kind) {
    return name_of(kind, kOps);
}
LayerKind layer_kind_from_string(const std::string &s) {
    return lookup(s, kKinds, "layer kind");
}
LayerRole layer_role_from_string(const std::string &s) {
    return lookup(s, kRoles, "layer role");
}
RotationMechanism mechanism_from_string(const std::string &s) {
    return lookup(s, kMechanisms, "rotation mechanism");
}
MagicVariant magic_variant_from_string(const std::string &s) {
    return lookup(s, kVariants, "magic variant");
}
OpKind op_kind_from_string(const std::string &s) {
    return lookup(s, kOps, "entangling op");
}

namespace {

ordered_json op_to_json(const EntanglingOp &op) {
    ordered_json j;
    j["op"] = to_string(op.kind);
    j["qubits"] = op.qubits;
    if (op.kind == OpKind::CZ) {
        return j;
    }
    j["basis"] = op.rotation.basis.str();
    j["angle"] = op.rotation.angle;
    j["mechanism"] = to_string(op.rotation.mechanism);
    j["magic"] = op.magic;
    j["magic_states"] = op.magic_states;
    j["variant"] = to_string(op.variant);
    j["repetitions"] = op.repetitions;
    if (op.k != 0) {
        j["k"] = op.k;
    }
    if (!op.inner_sandwich.empty()) {
        ordered_json inner = ordered_json::array();
        for (const auto &s : op.inner_sandwich) {
            ordered_json names = ordered_json::array();
            for (auto c : s) {
                names.push_back(c.name());
            }
            inner.push_back(names);
        }
        j["inner_sandwich"] = inner;
    }
    return j;
}

EntanglingOp op_from_json(const ordered_json &j, size_t n) {
    EntanglingOp op;
    op.kind = op_kind_from_string(j.at("op").get<std::string>());
    op.qubits = j.at("qubits").get<std::vector<size_t>>();
    if (op.kind == OpKind::CZ) {
        return op;
    }
    op.rotation.basis = PauliString::from_text(j.at("basis").get<std::string>());
    if (op.rotation.basis.num_qubits() != n) {
        throw std::invalid_argument("rotation basis has wrong qubit count");
    }
    op.rotation.angle = j.at("angle").get<double>();
    op.rotation.mechanism = mechanism_from_string(j.at("mechanism").get<std::string>());
    op.magic = j.at("magic").get<bool>();
    op.magic_states = j.value("magic_states", 1u);
    op.variant = magic_variant_from_string(j.value("variant", std::string("None")));
    op.repetitions = j.value("repetitions", 1u);
    op.k = j.value("k", 0);
    if (j.contains("inner_sandwich")) {
        for (const auto &s : j.at("inner_sandwich")) {
            std::vector<Clifford1Q> cs;
            for (const auto &name : s) {
                cs.push_back(Clifford1Q::from_name(name.get<std::string>()));
            }
            op.inner_sandwich.push_back(cs);
        }
    }
    return op;
}

}  // namespace

ordered_json to_json(const GateLayer &layer) {
    ordered_json j;
    j["kind"] = to_string(layer.kind);
    j["role"] = to_string(layer.role);
    ordered_json gates = ordered_json::array();
    switch (layer.kind) {
        case LayerKind::SingleQubitClifford:
            for (auto c : layer.cliffords) {
                gates.push_back(c.name());
            }
            break;
        case LayerKind::Entangling:
            for (const auto &op : layer.ops) {
                gates.push_back(op_to_json(op));
            }
            break;
        case LayerKind::HadamardBoundary:
            gates.push_back(ordered_json{{"t", layer.hadamard ? 1 : 0}});
            break;
        case LayerKind::PauliTwirl:
            gates.push_back(layer.twirl.str());
            break;
        case LayerKind::Measurement:
            gates.push_back(ordered_json{{"flips", layer.flips}});
            break;
    }
    j["gates"] = gates;
    return j;
}

ordered_json to_json(const LogicalCircuit &circuit) {
    ordered_json j;
    j["n"] = circuit.n;
    ordered_json layers = ordered_json::array();
    for (const auto &layer : circuit.layers) {
        layers.push_back(to_json(layer));
    }
    j["layers"] = layers;
    j["metadata"] = circuit.metadata;
    return j;
}

LogicalCircuit circuit_from_json(const ordered_json &j) {
    LogicalCircuit c;
    c.n = j.at("n").get<size_t>();
    for (const auto &lj : j.at("layers")) {
        GateLayer layer;
        layer.kind = layer_kind_from_string(lj.at("kind").get<std::string>());
        layer.role = layer_role_from_string(lj.value("role", std::string("plain")));
        const auto &gates = lj.at("gates");
        switch (layer.kind) {
            case LayerKind::SingleQubitClifford:
                for (const auto &g : gates) {
                    layer.cliffords.push_back(Clifford1Q::from_name(g.get<std::string>()));
                }
                break;
            case LayerKind::Entangling:
                for (const auto &g : gates) {
                    layer.ops.push_back(op_from_json(g, c.n));
                }
                break;
            case LayerKind::HadamardBoundary:
                layer.hadamard = gates.at(0).at("t").get<int>() != 0;
                break;
            case LayerKind::PauliTwirl:
                layer.twirl = PauliString::from_text(gates.at(0).get<std::string>());
                break;
            case LayerKind::Measurement:
                layer.flips = gates.at(0).at("flips").get<std::vector<uint8_t>>();
                break;
        }
        c.layers.push_back(std::move(layer));
    }
    if (j.contains("metadata")) {
        c.metadata = j.at("metadata");
    }
    c.validate();
    return c;
}

}  // namespace lacc
