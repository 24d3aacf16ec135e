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

#ifndef LACC_PAULI_ALGEBRA_CLIFFORD_TABLEAU_H
#define LACC_PAULI_ALGEBRA_CLIFFORD_TABLEAU_H

#include <string>
#include <vector>

#include "lacc/pauli_algebra/clifford_1q.h"
#include "lacc/pauli_algebra/pauli_string.h"

namespace lacc {

// In-place conjugation P -> G P G^dagger by elementary gates.
void conjugate_h(PauliString &p, size_t q);
void conjugate_s(PauliString &p, size_t q);
void conjugate_s_dag(PauliString &p, size_t q);
void conjugate_pauli(PauliString &p, const PauliString &g);
void conjugate_1q(PauliString &p, size_t q, Clifford1Q c);
void conjugate_cz(PauliString &p, size_t a, size_t b);
void conjugate_cx(PauliString &p, size_t control, size_t target);
/// Conjugation by exp(-i k (pi/4) axis). Only k mod 4 matters.
void conjugate_quarter_rotation(PauliString &p, const PauliString &axis, int k);

/// Clifford operation stored as the signed images of X_i and Z_i.
class CliffordTableau {
   public:
    explicit CliffordTableau(size_t num_qubits = 0);

    size_t num_qubits() const {
        return n_;
    }
    const PauliString &x_image(size_t q) const {
        return xs_[q];
    }
    const PauliString &z_image(size_t q) const {
        return zs_[q];
    }
    void set_images(size_t q, const PauliString &x_image, const PauliString &z_image);

    /// C P C^dagger.
    PauliString conjugate(const PauliString &p) const;

    // Append a gate after the current operation.
    void append_h(size_t q);
    void append_s(size_t q);
    void append_s_dag(size_t q);
    void append_pauli(const PauliString &g);
    void append_1q(size_t q, Clifford1Q c);
    void append_cz(size_t a, size_t b);
    void append_cx(size_t control, size_t target);
    void append_quarter_rotation(const PauliString &axis, int k);
    void append(const CliffordTableau &next);

    /// The operation "apply *this, then next".
    CliffordTableau then(const CliffordTableau &next) const;
    CliffordTableau inverse() const;

    bool is_identity() const;
    /// True when all images satisfy the canonical commutation relations.
    bool is_valid() const;

    bool operator==(const CliffordTableau &other) const;
    bool operator!=(const CliffordTableau &other) const {
        return !(*this == other);
    }
    std::string str() const;

   private:
    template <typename F>
    void for_each_image(F &&f) {
        for (auto &p : xs_) {
            f(p);
        }
        for (auto &p : zs_) {
            f(p);
        }
    }

    size_t n_;
    std::vector<PauliString> xs_;
    std::vector<PauliString> zs_;
};

PauliString conjugate(const CliffordTableau &tableau, const PauliString &p);

}  // namespace lacc

#endif
