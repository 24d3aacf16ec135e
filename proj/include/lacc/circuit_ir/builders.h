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

#ifndef LACC_CIRCUIT_IR_BUILDERS_H
#define LACC_CIRCUIT_IR_BUILDERS_H

#include <utility>
#include <vector>

#include "lacc/circuit_ir/circuit.h"
#include "lacc/util/rng.h"

namespace lacc {

struct IqpOptions {
    /// Probability that each candidate CZ of the random matching is kept.
    double cz_density = 1.0;
};

/// H layer, depth blocks of random diagonal gates and CZs, H layer, measurement.
LogicalCircuit build_iqp(size_t n, size_t depth, Rng &rng, const IqpOptions &options = {});

struct HamiltonianTerm {
    double coefficient;
    PauliString pauli;
};

struct TrotterOptions {
    RotationMechanism mechanism = RotationMechanism::ProjectiveMeasurement;
    /// Schedule terms with disjoint support into shared layers.
    bool pack = false;
};

/// Second-order product formula (prod_i R(a_i t/2N) prod_{i=L..1} R(a_i t/2N))^N,
/// one rotation per entangling layer unless packed.
LogicalCircuit build_trotter(const std::vector<HamiltonianTerm> &terms, double t, size_t steps,
                             const TrotterOptions &options = {});

/// Open 1D Heisenberg chain: J (XX + YY + ZZ) on neighbours plus h_i Z_i with h_i ~ U[-h, h].
std::vector<HamiltonianTerm> heisenberg_chain(size_t sites, double coupling, double field, Rng &rng);

/// Truncates (or cyclically extends) the block structure to exactly `blocks` blocks.
LogicalCircuit resize_blocks(const LogicalCircuit &circuit, size_t blocks);

double trotter_error_bound(double w, double t);

/// Mean number of repeat-until-success attempts, sum_i i / 2^i.
double rus_expected_attempts();

}  // namespace lacc

#endif
