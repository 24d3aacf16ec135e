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

#include "lacc/frame_simulator/stabilizer_state.h"

#include <stdexcept>

namespace lacc {

StabilizerState::StabilizerState(size_t num_qubits) : tableau_(num_qubits) {
}

int StabilizerState::expectation(const PauliString &p) const {
    size_t n = num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("StabilizerState: dimension mismatch");
    }
    // p lies in the stabilizer group iff it commutes with every stabilizer; it
    // then equals the product of the stabilizers whose destabilizer it anticommutes with.
    for (size_t i = 0; i < n; i++) {
        if (symplectic_product(p, tableau_.z_image(i))) {
            return 0;
        }
    }
    PauliAccumulator acc(n);
    for (size_t i = 0; i < n; i++) {
        if (symplectic_product(p, tableau_.x_image(i))) {
            acc.mul_right(tableau_.z_image(i));
        }
    }
    bool imaginary = false;
    PauliString product = acc.finish(&imaginary);
    if (imaginary || !product.same_operator(p)) {
        throw std::logic_error("StabilizerState: inconsistent tableau");
    }
    return product.sign() == p.sign() ? +1 : -1;
}

std::vector<int> StabilizerState::reference_bits() const {
    size_t n = num_qubits();
    std::vector<int> bits(n);
    for (size_t q = 0; q < n; q++) {
        int e = expectation(PauliString::single(n, q, 'Z'));
        bits[q] = e == 0 ? -1 : (e > 0 ? 0 : 1);
    }
    return bits;
}

}  // namespace lacc
