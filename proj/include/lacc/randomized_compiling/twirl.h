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

#ifndef LACC_RANDOMIZED_COMPILING_TWIRL_H
#define LACC_RANDOMIZED_COMPILING_TWIRL_H

#include <utility>
#include <vector>

#include "lacc/circuit_ir/circuit.h"
#include "lacc/util/rng.h"

namespace lacc {

struct AngleSign {
    size_t layer;  // index in the twirled circuit
    size_t op;
    int sign;
};

/// Randomness used by one twirled compilation.
struct TwirlRecord {
    /// Twirl Pauli chosen at each boundary: preparation first, measurement last.
    std::vector<PauliString> boundaries;
    /// The Pauli layers actually emitted: undo of the previous twirl times the next twirl.
    std::vector<PauliString> compiled;
    std::vector<AngleSign> angle_signs;
    /// Bits flipped back after measurement (X or Y in the final twirl).
    std::vector<uint8_t> mask;
};

/// (-1)^{symplectic(twirl, basis)} * theta.
double rotation_twirl_angle(const PauliString &twirl, const PauliString &basis, double theta);

/// Interleaves every gate layer with Pauli twirls. The preparation twirl is
/// drawn from {I,Z}^n and left in place; interior twirls are uniform Paulis
/// whose undo is merged into the next Pauli layer; the final twirl is undone by
/// flipping measured bits. Rotations see the twirl through an angle sign.
std::pair<LogicalCircuit, TwirlRecord> insert_twirls(const LogicalCircuit &circuit, Rng &rng);

/// bits ^= mask.
void apply_mask(std::vector<uint8_t> &bits, const std::vector<uint8_t> &mask);

}  // namespace lacc

#endif
