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

#ifndef LACC_RANDOMIZED_COMPILING_CHI_H
#define LACC_RANDOMIZED_COMPILING_CHI_H

#include <Eigen/Dense>
#include <vector>

#include "lacc/noise_models/channel.h"
#include "lacc/util/rng.h"

namespace lacc {

constexpr size_t kMaxChiQubits = 3;

/// Dense quantum channel on n <= 3 qubits, stored as its Choi matrix
/// J = sum_ab E(|a><b|) (x) |a><b| (output factor first).
class DenseChannel {
   public:
    static DenseChannel from_kraus(const std::vector<Eigen::MatrixXcd> &kraus);
    static DenseChannel from_unitary(const Eigen::MatrixXcd &u);
    static DenseChannel from_choi(size_t num_qubits, Eigen::MatrixXcd choi);
    /// Random channel from a Haar-like Stinespring isometry with the given Kraus rank.
    static DenseChannel random(size_t num_qubits, size_t kraus_rank, Rng &rng);

    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return size_t{1} << n_;
    }
    const Eigen::MatrixXcd &choi() const {
        return choi_;
    }

    Eigen::MatrixXcd apply(const Eigen::MatrixXcd &rho) const;
    /// Throws std::invalid_argument unless positive and trace preserving within tol.
    void validate_cptp(double tol = 1e-9) const;

   private:
    size_t n_ = 0;
    Eigen::MatrixXcd choi_;
};

/// Process matrix in the unnormalized Pauli basis, indexed like local_pauli.
struct ChiMatrix {
    size_t n = 0;
    Eigen::MatrixXcd chi;

    double max_offdiag() const;
    double diag_sum() const;
    /// Diagonal as a Pauli channel; throws if the diagonal is not a distribution.
    PauliChannel to_pauli_channel(double tol = 1e-9) const;
};

ChiMatrix chi_matrix(const DenseChannel &channel);

/// All 4^n Pauli matrices in local_pauli order.
std::vector<Eigen::MatrixXcd> pauli_group_matrices(size_t num_qubits);

/// chi of the group average g^dag E(g rho g^dag) g. Validates the input first.
ChiMatrix twirl_channel(const DenseChannel &channel, const std::vector<Eigen::MatrixXcd> &group);

}  // namespace lacc

#endif
