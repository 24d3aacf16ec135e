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

#ifndef LACC_RANDOMIZED_COMPILING_VERIFY_H
#define LACC_RANDOMIZED_COMPILING_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace lacc {

/// Outcome of twirling one random channel or noisy magic state.
struct TwirlCheck {
    /// "pauli" for channel twirls, otherwise the magic state name.
    std::string kind;
    size_t qubits = 0;
    size_t index = 0;
    /// Largest off-diagonal modulus of the twirled chi matrix, or of the twirled
    /// state in the {|v>, Z|v>} basis.
    double max_offdiag = 0;
    /// Largest imaginary part on the diagonal.
    double diag_imag = 0;
    /// Sum of the diagonal; |diag_sum - 1| is the trace error.
    double diag_sum = 0;
    double trace_error = 0;
    /// Smallest real diagonal entry (should be nonnegative).
    double min_diag = 0;
};

/// Twirls `count` random CPTP channels on 1..max_qubits qubits over the Pauli group.
std::vector<TwirlCheck> verify_pauli_twirl(size_t count, size_t max_qubits, uint64_t seed);

/// Twirls `count` random noisy copies of every magic state.
std::vector<TwirlCheck> verify_magic_twirl(size_t count, uint64_t seed);

}  // namespace lacc

#endif
