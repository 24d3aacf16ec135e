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

#include "lacc/pauli_algebra/pauli_string.h"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace lacc {

namespace {

size_t words_for(size_t n) {
    return (n + 63) / 64;
}

void check_same_size(const PauliString &a, const PauliString &b, const char *op) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()) + " qubits)");
    }
}

size_t popcount_and(const uint64_t *a, const uint64_t *b, size_t w) {
    size_t total = 0;
    for (size_t k = 0; k < w; k++) {
        total += std::popcount(a[k] & b[k]);
    }
    return total;
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : n_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {
}

PauliString PauliString::from_text(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    } else if (text.size() >= 3 && text.substr(0, 3) == "\xE2\x88\x92") {
        neg = true;
        text.remove_prefix(3);
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        result.set(q, text[q] == '_' ? 'I' : text[q]);
    }
    result.neg_ = neg;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char p) {
    PauliString result(num_qubits);
    result.set(q, p);
    return result;
}

char PauliString::pauli_at(size_t q) const {
    static const char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(int)x(q) | ((int)z(q) << 1)];
}

void PauliString::set_xz(size_t q, bool xv, bool zv) {
    if (q >= n_) {
        throw std::out_of_range("PauliString: qubit index out of range");
    }
    uint64_t bit = uint64_t{1} << (q & 63);
    x_[q >> 6] = xv ? (x_[q >> 6] | bit) : (x_[q >> 6] & ~bit);
    z_[q >> 6] = zv ? (z_[q >> 6] | bit) : (z_[q >> 6] & ~bit);
}

void PauliString::set(size_t q, char p) {
    switch (p) {
        case 'I':
            set_xz(q, false, false);
            break;
        case 'X':
            set_xz(q, true, false);
            break;
        case 'Y':
            set_xz(q, true, true);
            break;
        case 'Z':
            set_xz(q, false, true);
            break;
        default:
            throw std::invalid_argument(std::string("PauliString: invalid Pauli character '") + p + "'");
    }
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t k = 0; k < x_.size(); k++) {
        total += std::popcount(x_[k] | z_[k]);
    }
    return total;
}

size_t PauliString::count_y() const {
    return popcount_and(x_.data(), z_.data(), x_.size());
}

bool PauliString::is_identity() const {
    for (size_t k = 0; k < x_.size(); k++) {
        if (x_[k] | z_[k]) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> result;
    for (size_t q = 0; q < n_; q++) {
        if (x(q) || z(q)) {
            result.push_back(q);
        }
    }
    return result;
}

bool PauliString::same_operator(const PauliString &other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliString::operator==(const PauliString &other) const {
    return same_operator(other) && neg_ == other.neg_;
}

std::string PauliString::str() const {
    std::string result;
    result.reserve(n_ + 1);
    result.push_back(neg_ ? '-' : '+');
    for (size_t q = 0; q < n_; q++) {
        result.push_back(pauli_at(q));
    }
    return result;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

bool symplectic_product(const PauliString &a, const PauliString &b) {
    check_same_size(a, b, "symplectic_product");
    size_t total = 0;
    for (size_t k = 0; k < a.num_words(); k++) {
        total += std::popcount((a.xs()[k] & b.zs()[k]) ^ (a.zs()[k] & b.xs()[k]));
    }
    return total & 1;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    check_same_size(a, b, "multiply");
    PauliAccumulator acc(a.num_qubits());
    acc.mul_right(a);
    acc.mul_right(b);
    return acc.finish();
}

PauliString random_pauli(size_t num_qubits, const std::vector<size_t> &support, Rng &rng) {
    if (support.empty()) {
        throw std::invalid_argument("random_pauli: empty support");
    }
    PauliString result(num_qubits);
    for (size_t q : support) {
        uint64_t r = rng.below(4);
        result.set_xz(q, r & 1, r & 2);
    }
    return result;
}

PauliAccumulator::PauliAccumulator(size_t num_qubits)
    : n_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {
}

void PauliAccumulator::mul_right(const PauliString &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("PauliAccumulator: dimension mismatch");
    }
    // p = sign * i^{#Y} X^x Z^z; moving Z^{z_acc} past X^{x_p} costs (-1)^{z_acc . x_p}.
    size_t w = x_.size();
    unsigned phase = phase_ + (unsigned)p.count_y() + (p.negative() ? 2 : 0);
    phase += 2 * (unsigned)(popcount_and(z_.data(), p.xs(), w) & 1);
    for (size_t k = 0; k < w; k++) {
        x_[k] ^= p.xs()[k];
        z_[k] ^= p.zs()[k];
    }
    phase_ = phase & 3;
}

PauliString PauliAccumulator::finish(bool *imaginary) const {
    PauliString result(n_);
    for (size_t k = 0; k < x_.size(); k++) {
        result.xs()[k] = x_[k];
        result.zs()[k] = z_[k];
    }
    // X^x Z^z = i^{-#Y} * sigma.
    unsigned d = (phase_ + 4 - (unsigned)(result.count_y() & 3)) & 3;
    bool im = d & 1;
    if (imaginary != nullptr) {
        *imaginary = im;
    }
    unsigned half = im ? (d - 1) / 2 : d / 2;
    result.set_sign((half & 1) ? -1 : +1);
    return result;
}

}  // namespace lacc
