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

#include "lacc/pauli_algebra/clifford_tableau.h"

#include <sstream>
#include <stdexcept>

namespace lacc {

namespace {

void check_qubit(const PauliString &p, size_t q) {
    if (q >= p.num_qubits()) {
        throw std::out_of_range("qubit index out of range");
    }
}

}  // namespace

void conjugate_h(PauliString &p, size_t q) {
    check_qubit(p, q);
    bool x = p.x(q), z = p.z(q);
    if (x && z) {
        p.negate();
    }
    p.set_xz(q, z, x);
}

void conjugate_s(PauliString &p, size_t q) {
    check_qubit(p, q);
    bool x = p.x(q), z = p.z(q);
    // X -> Y, Y -> -X.
    if (x && z) {
        p.negate();
    }
    p.set_xz(q, x, z != x);
}

void conjugate_s_dag(PauliString &p, size_t q) {
    check_qubit(p, q);
    bool x = p.x(q), z = p.z(q);
    // X -> -Y, Y -> X.
    if (x && !z) {
        p.negate();
    }
    p.set_xz(q, x, z != x);
}

void conjugate_pauli(PauliString &p, const PauliString &g) {
    if (symplectic_product(p, g)) {
        p.negate();
    }
}

void conjugate_1q(PauliString &p, size_t q, Clifford1Q c) {
    check_qubit(p, q);
    bool x = p.x(q), z = p.z(q);
    if (!x && !z) {
        return;
    }
    SignedPauli1 img = x ? (z ? c.image_y() : c.image_x()) : c.image_z();
    if (img.negative()) {
        p.negate();
    }
    p.set_xz(q, img.x(), img.z());
}

void conjugate_cz(PauliString &p, size_t a, size_t b) {
    check_qubit(p, a);
    check_qubit(p, b);
    bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
    if (xa && xb && (za != zb)) {
        p.negate();
    }
    p.set_xz(a, xa, za != xb);
    p.set_xz(b, xb, zb != xa);
}

void conjugate_cx(PauliString &p, size_t control, size_t target) {
    check_qubit(p, control);
    check_qubit(p, target);
    bool xc = p.x(control), zc = p.z(control), xt = p.x(target), zt = p.z(target);
    if (xc && zt && (xt == zc)) {
        p.negate();
    }
    p.set_xz(control, xc, zc != zt);
    p.set_xz(target, xt != xc, zt);
}

void conjugate_quarter_rotation(PauliString &p, const PauliString &axis, int k) {
    k = ((k % 4) + 4) % 4;
    if (k == 0 || !symplectic_product(p, axis)) {
        return;
    }
    if (k == 2) {
        p.negate();
        return;
    }
    // exp(-i pi/4 A) Q exp(i pi/4 A) = -i A Q, and A Q = i r for anticommuting
    // A, Q under the multiply() convention, so the image is r.
    PauliString r = multiply(axis, p);
    if (k == 3) {
        r.negate();
    }
    p = r;
}

CliffordTableau::CliffordTableau(size_t num_qubits) : n_(num_qubits) {
    xs_.reserve(n_);
    zs_.reserve(n_);
    for (size_t q = 0; q < n_; q++) {
        xs_.push_back(PauliString::single(n_, q, 'X'));
        zs_.push_back(PauliString::single(n_, q, 'Z'));
    }
}

void CliffordTableau::set_images(size_t q, const PauliString &x_image, const PauliString &z_image) {
    if (x_image.num_qubits() != n_ || z_image.num_qubits() != n_) {
        throw std::invalid_argument("CliffordTableau: image dimension mismatch");
    }
    xs_.at(q) = x_image;
    zs_.at(q) = z_image;
}

PauliString CliffordTableau::conjugate(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("CliffordTableau: dimension mismatch");
    }
    // p = sign * i^{#Y} * prod_q X_q^{x_q} Z_q^{z_q}.
    PauliAccumulator acc(n_);
    acc.mul_phase((unsigned)(p.count_y() + (p.negative() ? 2 : 0)));
    for (size_t q = 0; q < n_; q++) {
        if (p.x(q)) {
            acc.mul_right(xs_[q]);
        }
        if (p.z(q)) {
            acc.mul_right(zs_[q]);
        }
    }
    bool imaginary = false;
    PauliString result = acc.finish(&imaginary);
    if (imaginary) {
        throw std::logic_error("CliffordTableau: invalid tableau produced non-Hermitian image");
    }
    return result;
}

void CliffordTableau::append_h(size_t q) {
    for_each_image([&](PauliString &p) { conjugate_h(p, q); });
}
void CliffordTableau::append_s(size_t q) {
    for_each_image([&](PauliString &p) { conjugate_s(p, q); });
}
void CliffordTableau::append_s_dag(size_t q) {
    for_each_image([&](PauliString &p) { conjugate_s_dag(p, q); });
}
void CliffordTableau::append_pauli(const PauliString &g) {
    for_each_image([&](PauliString &p) { conjugate_pauli(p, g); });
}
void CliffordTableau::append_1q(size_t q, Clifford1Q c) {
    for_each_image([&](PauliString &p) { conjugate_1q(p, q, c); });
}
void CliffordTableau::append_cz(size_t a, size_t b) {
    for_each_image([&](PauliString &p) { conjugate_cz(p, a, b); });
}
void CliffordTableau::append_cx(size_t control, size_t target) {
    for_each_image([&](PauliString &p) { conjugate_cx(p, control, target); });
}
void CliffordTableau::append_quarter_rotation(const PauliString &axis, int k) {
    for_each_image([&](PauliString &p) { conjugate_quarter_rotation(p, axis, k); });
}

void CliffordTableau::append(const CliffordTableau &next) {
    if (next.n_ != n_) {
        throw std::invalid_argument("CliffordTableau: dimension mismatch");
    }
    for_each_image([&](PauliString &p) { p = next.conjugate(p); });
}

CliffordTableau CliffordTableau::then(const CliffordTableau &next) const {
    CliffordTableau result = *this;
    result.append(next);
    return result;
}

CliffordTableau CliffordTableau::inverse() const {
    CliffordTableau inv(n_);
    for (size_t i = 0; i < n_; i++) {
        PauliString ix(n_), iz(n_);
        for (size_t j = 0; j < n_; j++) {
            ix.set_xz(j, zs_[j].z(i), xs_[j].z(i));
            iz.set_xz(j, zs_[j].x(i), xs_[j].x(i));
        }
        // Fix signs so that the forward map sends the images back to +X_i, +Z_i.
        if (conjugate(ix).negative()) {
            ix.negate();
        }
        if (conjugate(iz).negative()) {
            iz.negate();
        }
        inv.xs_[i] = ix;
        inv.zs_[i] = iz;
    }
    return inv;
}

bool CliffordTableau::is_identity() const {
    return *this == CliffordTableau(n_);
}

bool CliffordTableau::is_valid() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            if (symplectic_product(xs_[i], xs_[j]) || symplectic_product(zs_[i], zs_[j])) {
                return false;
            }
            if (symplectic_product(xs_[i], zs_[j]) != (i == j)) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordTableau::operator==(const CliffordTableau &other) const {
    return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_;
}

std::string CliffordTableau::str() const {
    std::ostringstream out;
    for (size_t q = 0; q < n_; q++) {
        out << "X" << q << " -> " << xs_[q] << "\n";
        out << "Z" << q << " -> " << zs_[q] << "\n";
    }
    return out.str();
}

PauliString conjugate(const CliffordTableau &tableau, const PauliString &p) {
    return tableau.conjugate(p);
}

}  // namespace lacc
