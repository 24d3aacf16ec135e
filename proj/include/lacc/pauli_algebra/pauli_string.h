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

#ifndef LACC_PAULI_ALGEBRA_PAULI_STRING_H
#define LACC_PAULI_ALGEBRA_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lacc/util/rng.h"

namespace lacc {

/// An n-qubit Hermitian Pauli operator with a sign, stored in binary symplectic
/// form. Bit q of the x (z) words is set when qubit q carries X or Y (Z or Y).
///
/// Phase convention: Y := iXZ. A PauliString with sign s and bits (x, z)
/// denotes s * prod_q sigma_q, where sigma_q is the ordinary Pauli matrix.
class PauliString {
   public:
    explicit PauliString(size_t num_qubits = 0);

    /// Parses "+XIZ", "-Y", or an unsigned "XZ". '_' is accepted for I.
    static PauliString from_text(std::string_view text);
    /// Weight-one Pauli `p` ('I', 'X', 'Y' or 'Z') on qubit q.
    static PauliString single(size_t num_qubits, size_t q, char p);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_words() const {
        return x_.size();
    }

    bool x(size_t q) const {
        return (x_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (z_[q >> 6] >> (q & 63)) & 1;
    }
    char pauli_at(size_t q) const;
    void set(size_t q, char p);
    void set_xz(size_t q, bool x, bool z);

    bool negative() const {
        return neg_;
    }
    int sign() const {
        return neg_ ? -1 : +1;
    }
    void set_sign(int s) {
        neg_ = s < 0;
    }
    void negate() {
        neg_ = !neg_;
    }

    size_t weight() const;
    size_t count_y() const;
    bool is_identity() const;
    std::vector<size_t> support() const;

    /// Unsigned equality (ignores the sign).
    bool same_operator(const PauliString &other) const;
    bool operator==(const PauliString &other) const;
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }

    std::string str() const;

    uint64_t *xs() {
        return x_.data();
    }
    uint64_t *zs() {
        return z_.data();
    }
    const uint64_t *xs() const {
        return x_.data();
    }
    const uint64_t *zs() const {
        return z_.data();
    }

   private:
    size_t n_;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    bool neg_ = false;
};

std::ostream &operator<<(std::ostream &out, const PauliString &p);

/// Returns 0 if a and b commute and 1 if they anticommute.
bool symplectic_product(const PauliString &a, const PauliString &b);

/// Returns the Hermitian Pauli r with a*b = i^{symplectic_product(a, b)} * r.
///
/// For commuting inputs this is the exact product. For anticommuting inputs
/// the product is anti-Hermitian and the factor i is split off; for example
/// X*Z = -iY = i*(-Y), so multiply(X, Z) is -Y.
PauliString multiply(const PauliString &a, const PauliString &b);

/// Uniformly random Pauli over `support` (identity elsewhere, sign +).
PauliString random_pauli(size_t num_qubits, const std::vector<size_t> &support, Rng &rng);

/// Running product i^phase * X^x Z^z used when composing images under a
/// tableau. Multiplication on the right by Hermitian Paulis.
class PauliAccumulator {
   public:
    explicit PauliAccumulator(size_t num_qubits);
    void mul_right(const PauliString &p);
    /// Multiplies by i^k.
    void mul_phase(unsigned k) {
        phase_ = (phase_ + k) & 3;
    }
    /// Converts back to a signed Hermitian Pauli. Sets *imaginary when a
    /// residual factor of i remains (in which case the result r satisfies
    /// accumulated = i*r).
    PauliString finish(bool *imaginary = nullptr) const;

   private:
    size_t n_;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    unsigned phase_ = 0;
};

}  // namespace lacc

#endif
