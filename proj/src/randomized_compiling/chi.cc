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

#include "lacc/randomized_compiling/chi.h"

#include <cmath>
#include <stdexcept>

#include "lacc/frame_simulator/dense.h"

namespace lacc {

namespace {

using Mat = Eigen::MatrixXcd;

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

size_t qubits_for_dim(Eigen::Index d) {
    size_t n = 0;
    while ((Eigen::Index{1} << n) < d) n++;
    if ((Eigen::Index{1} << n) != d || n == 0 || n > kMaxChiQubits) {
        throw std::invalid_argument("dense channel: dimension must be 2^n with 1 <= n <= 3");
    }
    return n;
}

// |B>> with component (i, a) -> B(i, a), output index high.
Eigen::VectorXcd vectorize(const Mat &b) {
    Eigen::Index d = b.rows();
    Eigen::VectorXcd v(d * d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index a = 0; a < d; a++) {
            v(i * d + a) = b(i, a);
        }
    }
    return v;
}

}  // namespace

DenseChannel DenseChannel::from_kraus(const std::vector<Mat> &kraus) {
    if (kraus.empty()) {
        throw std::invalid_argument("from_kraus: no operators");
    }
    size_t n = qubits_for_dim(kraus[0].rows());
    Eigen::Index d = kraus[0].rows();
    Mat choi = Mat::Zero(d * d, d * d);
    for (const Mat &k : kraus) {
        if (k.rows() != d || k.cols() != d) {
            throw std::invalid_argument("from_kraus: operator shape mismatch");
        }
        Eigen::VectorXcd v = vectorize(k);
        choi += v * v.adjoint();
    }
    return from_choi(n, std::move(choi));
}

DenseChannel DenseChannel::from_unitary(const Mat &u) {
    return from_kraus({u});
}

DenseChannel DenseChannel::from_choi(size_t num_qubits, Mat choi) {
    if (num_qubits == 0 || num_qubits > kMaxChiQubits) {
        throw std::invalid_argument("dense channel: 1 <= n <= 3");
    }
    Eigen::Index d2 = Eigen::Index{1} << (2 * num_qubits);
    if (choi.rows() != d2 || choi.cols() != d2) {
        throw std::invalid_argument("from_choi: Choi matrix shape mismatch");
    }
    DenseChannel c;
    c.n_ = num_qubits;
    c.choi_ = std::move(choi);
    return c;
}

DenseChannel DenseChannel::random(size_t num_qubits, size_t kraus_rank, Rng &rng) {
    if (kraus_rank == 0) {
        throw std::invalid_argument("random channel: rank must be positive");
    }
    Eigen::Index d = Eigen::Index{1} << num_qubits;
    Eigen::Index rows = d * (Eigen::Index)kraus_rank;
    Mat g(rows, d);
    for (Eigen::Index i = 0; i < rows; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            g(i, j) = std::complex<double>(rng.normal(), rng.normal());
        }
    }
    // Isometry V = G (G^dag G)^{-1/2}.
    Eigen::SelfAdjointEigenSolver<Mat> es(g.adjoint() * g);
    Mat inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                   es.eigenvectors().adjoint();
    Mat v = g * inv_sqrt;
    std::vector<Mat> kraus;
    for (size_t k = 0; k < kraus_rank; k++) {
        kraus.push_back(v.block((Eigen::Index)k * d, 0, d, d));
    }
    return from_kraus(kraus);
}

Mat DenseChannel::apply(const Mat &rho) const {
    Eigen::Index d = (Eigen::Index)dim();
    if (rho.rows() != d || rho.cols() != d) {
        throw std::invalid_argument("DenseChannel::apply: dimension mismatch");
    }
    Mat out = Mat::Zero(d, d);
    for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) {
            if (rho(a, b) == 0.0) continue;
            for (Eigen::Index i = 0; i < d; i++) {
                for (Eigen::Index j = 0; j < d; j++) {
                    out(i, j) += rho(a, b) * choi_(i * d + a, j * d + b);
                }
            }
        }
    }
    return out;
}

void DenseChannel::validate_cptp(double tol) const {
    Eigen::Index d = (Eigen::Index)dim();
    if ((choi_ - choi_.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("channel is not Hermitian-preserving");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es((choi_ + choi_.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("channel is not completely positive");
    }
    for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) {
            std::complex<double> tr = 0;
            for (Eigen::Index i = 0; i < d; i++) {
                tr += choi_(i * d + a, i * d + b);
            }
            if (std::abs(tr - (a == b ? 1.0 : 0.0)) > tol) {
                throw std::invalid_argument("channel is not trace preserving");
            }
        }
    }
}

double ChiMatrix::max_offdiag() const {
    double m = 0;
    for (Eigen::Index i = 0; i < chi.rows(); i++) {
        for (Eigen::Index j = 0; j < chi.cols(); j++) {
            if (i != j) m = std::max(m, std::abs(chi(i, j)));
        }
    }
    return m;
}

double ChiMatrix::diag_sum() const {
    return chi.diagonal().real().sum();
}

PauliChannel ChiMatrix::to_pauli_channel(double tol) const {
    std::vector<double> probs((size_t)chi.rows());
    for (size_t i = 0; i < probs.size(); i++) {
        std::complex<double> v = chi((Eigen::Index)i, (Eigen::Index)i);
        if (std::abs(v.imag()) > tol || v.real() < -tol) {
            throw std::invalid_argument("chi diagonal is not a probability vector");
        }
        probs[i] = std::max(0.0, v.real());
    }
    if (std::abs(diag_sum() - 1) > tol) {
        throw std::invalid_argument("chi diagonal does not sum to 1");
    }
    return PauliChannel::from_probabilities(n, probs);
}

std::vector<Mat> pauli_group_matrices(size_t num_qubits) {
    std::vector<Mat> out;
    uint64_t count = uint64_t{1} << (2 * num_qubits);
    for (uint64_t i = 0; i < count; i++) {
        out.push_back(dense_pauli_matrix(local_pauli(i, num_qubits)));
    }
    return out;
}

ChiMatrix chi_matrix(const DenseChannel &channel) {
    size_t n = channel.num_qubits();
    double d = (double)channel.dim();
    std::vector<Mat> basis = pauli_group_matrices(n);
    std::vector<Eigen::VectorXcd> vecs;
    for (const Mat &b : basis) vecs.push_back(vectorize(b));
    ChiMatrix out;
    out.n = n;
    Eigen::Index m = (Eigen::Index)basis.size();
    out.chi.resize(m, m);
    for (Eigen::Index i = 0; i < m; i++) {
        Eigen::RowVectorXcd left = vecs[(size_t)i].adjoint() * channel.choi();
        for (Eigen::Index j = 0; j < m; j++) {
            out.chi(i, j) = (left * vecs[(size_t)j]).value() / (d * d);
        }
    }
    return out;
}

ChiMatrix twirl_channel(const DenseChannel &channel, const std::vector<Mat> &group) {
    channel.validate_cptp();
    if (group.empty()) {
        throw std::invalid_argument("twirl_channel: empty group");
    }
    Eigen::Index d = (Eigen::Index)channel.dim();
    Mat sum = Mat::Zero(d * d, d * d);
    for (const Mat &g : group) {
        if (g.rows() != d || g.cols() != d) {
            throw std::invalid_argument("twirl_channel: group element shape mismatch");
        }
        // Choi of rho -> g^dag E(g rho g^dag) g.
        sum += kron(g.adjoint(), g.transpose()) * channel.choi() * kron(g, g.conjugate());
    }
    sum /= (double)group.size();
    return chi_matrix(DenseChannel::from_choi(channel.num_qubits(), sum));
}

}  // namespace lacc
