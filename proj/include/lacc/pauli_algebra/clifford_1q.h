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

#ifndef LACC_PAULI_ALGEBRA_CLIFFORD_1Q_H
#define LACC_PAULI_ALGEBRA_CLIFFORD_1Q_H

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace lacc {

/// A signed single-qubit Pauli packed as bit0 = x, bit1 = z, bit2 = negative.
struct SignedPauli1 {
    uint8_t bits = 0;
    bool x() const {
        return bits & 1;
    }
    bool z() const {
        return bits & 2;
    }
    bool negative() const {
        return bits & 4;
    }
    char letter() const;
};

/// Element of the 24-element single-qubit Clifford group (modulo phase).
class Clifford1Q {
   public:
    static constexpr size_t kCount = 24;

    constexpr Clifford1Q() = default;
    static Clifford1Q from_index(uint8_t index);
    /// Accepts a gate name ("I", "H", "S", "S_DAG", "SQRT_X", ...) or a
    /// '+'-joined sequence of names, applied left to right.
    static Clifford1Q from_name(std::string_view name);

    static Clifford1Q I();
    static Clifford1Q X();
    static Clifford1Q Y();
    static Clifford1Q Z();
    static Clifford1Q H();
    static Clifford1Q S();
    static Clifford1Q S_DAG();
    static Clifford1Q SQRT_X();
    static Clifford1Q SQRT_X_DAG();

    uint8_t index() const {
        return index_;
    }
    const std::string &name() const;

    /// The Clifford "apply *this, then next".
    Clifford1Q then(Clifford1Q next) const;
    Clifford1Q inverse() const;

    /// Images under conjugation C P C^dagger.
    SignedPauli1 image_x() const;
    SignedPauli1 image_y() const;
    SignedPauli1 image_z() const;

    bool is_identity() const {
        return index_ == 0;
    }
    bool is_pauli() const;

    /// A representative 2x2 unitary, row-major. Global phase is arbitrary.
    std::array<std::complex<double>, 4> unitary() const;

    bool operator==(const Clifford1Q &other) const {
        return index_ == other.index_;
    }
    bool operator!=(const Clifford1Q &other) const {
        return index_ != other.index_;
    }

   private:
    explicit constexpr Clifford1Q(uint8_t index) : index_(index) {
    }
    uint8_t index_ = 0;
};

}  // namespace lacc

#endif
