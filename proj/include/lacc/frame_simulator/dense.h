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

#ifndef LACC_FRAME_SIMULATOR_DENSE_H
#define LACC_FRAME_SIMULATOR_DENSE_H

#include <Eigen/Dense>
#include <vector>

#include "lacc/circuit_ir/circuit.h"
#include "lacc/noise_models/noise_plan.h"

namespace lacc {

/// Density matrix with qubit q on bit q of the basis index.
using DenseState = Eigen::MatrixXcd;

constexpr size_t kMaxDenseQubits = 6;

struct DenseOptions {
    /// Repeat-until-success rotations in targets see the mixture over attempt counts.
    bool rus_mixture = true;
    uint32_t rus_max_attempts = 20;
};

/// Pre-measurement state. A null plan gives the ideal state.
DenseState dense_output_state(const LogicalCircuit &circuit, const NoisePlan *plan, const DenseOptions &options = {});

/// Distribution over output bitstrings (index bit q = qubit q) after the measurement flips.
std::vector<double> exact_output_distribution(const LogicalCircuit &circuit, const NoisePlan *plan,
                                              const DenseOptions &options = {});

std::vector<double> measurement_distribution(const DenseState &rho, const std::vector<uint8_t> &flips);

// Elementary dense operations, exposed for the verifiers.
void dense_apply_pauli_channel(DenseState &rho, const StochasticPauliChannel &channel);
void dense_apply_pauli_rotation(DenseState &rho, const PauliString &basis, double angle);
void dense_apply_1q(DenseState &rho, size_t q, const Eigen::Matrix2cd &u);
void dense_apply_cz(DenseState &rho, size_t a, size_t b);
/// Dense matrix of a signed Pauli string, qubit q on bit q.
Eigen::MatrixXcd dense_pauli_matrix(const PauliString &p);
/// rho -> P rho P for a Hermitian Pauli.
DenseState dense_conjugate_pauli(const DenseState &rho, const PauliString &p);

}  // namespace lacc

#endif
