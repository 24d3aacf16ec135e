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

#ifndef LACC_TESTS_TEST_UTIL_H
#define LACC_TESTS_TEST_UTIL_H

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "lacc/pauli_algebra/clifford_1q.h"
#include "lacc/pauli_algebra/pauli_string.h"
#include "lacc/util/rng.h"

namespace lacc_test {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline lacc::Rng independent_test_rng() {
    return lacc::Rng(0x5EEDF00Dull);
}

/// Qubit 0 is the least significant bit of the basis index.
inline Mat kron_le(const Mat &high, const Mat &low) {
    Mat out(high.rows() * low.rows(), high.cols() * low.cols());
    for (Eigen::Index i = 0; i < high.rows(); i++) {
        for (Eigen::Index j = 0; j < high.cols(); j++) {
            out.block(i * low.rows(), j * low.cols(), low.rows(), low.cols()) = high(i, j) * low;
        }
    }
    return out;
}

inline Mat pauli_1q(char c) {
    Mat m(2, 2);
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

inline Mat pauli_matrix(const lacc::PauliString &p) {
    Mat out = Mat::Identity(1, 1);
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out = kron_le(pauli_1q(p.pauli_at(q)), out);
    }
    return p.negative() ? Mat(-out) : out;
}

/// Embeds a 1-qubit gate on qubit q of n.
inline Mat embed_1q(const Mat &g, size_t q, size_t n) {
    Mat out = Mat::Identity(1, 1);
    for (size_t k = 0; k < n; k++) {
        out = kron_le(k == q ? g : Mat(Mat::Identity(2, 2)), out);
    }
    return out;
}

inline Mat clifford_matrix(lacc::Clifford1Q c) {
    auto u = c.unitary();
    Mat m(2, 2);
    m << u[0], u[1], u[2], u[3];
    return m;
}

inline Mat cz_matrix(size_t a, size_t b, size_t n) {
    Mat m = Mat::Identity(1 << n, 1 << n);
    for (size_t i = 0; i < (1u << n); i++) {
        if (((i >> a) & 1) && ((i >> b) & 1)) {
            m(i, i) = -1;
        }
    }
    return m;
}

inline Mat cx_matrix(size_t c, size_t t, size_t n) {
    size_t dim = size_t{1} << n;
    Mat m = Mat::Zero(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        size_t j = ((i >> c) & 1) ? (i ^ (size_t{1} << t)) : i;
        m(j, i) = 1;
    }
    return m;
}

/// Matrix exponential exp(-i a P) for a Pauli P (P^2 = 1).
inline Mat pauli_exp(const lacc::PauliString &p, double a) {
    Mat pm = pauli_matrix(p);
    return std::cos(a) * Mat::Identity(pm.rows(), pm.cols()) - cd(0, std::sin(a)) * pm;
}

/// Decomposes a matrix known to be +-P into (P, sign), comparing against all Paulis.
inline bool equals_signed_pauli(const Mat &m, const lacc::PauliString &p, double tol = 1e-9) {
    return (m - pauli_matrix(p)).norm() < tol;
}

}  // namespace lacc_test

#endif
