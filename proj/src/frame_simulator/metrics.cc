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

#include "lacc/frame_simulator/metrics.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lacc {

namespace {

DenseState psd_sqrt(const DenseState &m) {
    Eigen::SelfAdjointEigenSolver<DenseState> es(m);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

void check_square_pair(const DenseState &a, const DenseState &b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw std::invalid_argument("dimension mismatch");
    }
}

}  // namespace

double exact_tvd(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("exact_tvd: dimension mismatch");
    }
    double total = 0;
    for (size_t i = 0; i < p.size(); i++) {
        total += std::abs(p[i] - q[i]);
    }
    return total / 2;
}

double exact_fidelity(const DenseState &rho, const DenseState &sigma) {
    check_square_pair(rho, sigma);
    DenseState s = psd_sqrt(rho);
    DenseState inner = s * sigma * s;
    inner = (inner + inner.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<DenseState> es(inner);
    double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::min(1.0, tr * tr);
}

double exact_renyi2_density(const DenseState &rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 2 || !std::has_single_bit((uint64_t)rho.rows())) {
        throw std::invalid_argument("exact_renyi2_density: need a 2^n x 2^n matrix");
    }
    double n = (double)std::countr_zero((uint64_t)rho.rows());
    double purity = (rho * rho).trace().real();
    return -std::log2(purity) / n;
}

bool is_density_matrix(const DenseState &rho, double tol) {
    if (rho.rows() != rho.cols()) {
        return false;
    }
    if (std::abs(rho.trace() - std::complex<double>(1, 0)) > tol) {
        return false;
    }
    if ((rho - rho.adjoint()).norm() > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<DenseState> es((rho + rho.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff() >= -tol;
}

}  // namespace lacc
