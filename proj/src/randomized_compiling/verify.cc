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

#include "lacc/randomized_compiling/verify.h"

#include <cmath>
#include <stdexcept>

#include "lacc/randomized_compiling/chi.h"
#include "lacc/randomized_compiling/magic_twirl.h"
#include "lacc/util/rng.h"

namespace lacc {

std::vector<TwirlCheck> verify_pauli_twirl(size_t count, size_t max_qubits, uint64_t seed) {
    if (max_qubits < 1 || max_qubits > kMaxChiQubits) {
        throw std::invalid_argument("verify_pauli_twirl: max_qubits must lie in [1, 3]");
    }
    std::vector<std::vector<Eigen::MatrixXcd>> groups;
    for (size_t n = 1; n <= max_qubits; n++) groups.push_back(pauli_group_matrices(n));
    std::vector<TwirlCheck> out;
    for (size_t i = 0; i < count; i++) {
        Rng rng(derive_seed(seed, i));
        size_t n = 1 + i % max_qubits;
        size_t d2 = size_t{1} << (2 * n);
        DenseChannel ch = DenseChannel::random(n, 1 + (size_t)rng.below(d2), rng);
        ChiMatrix chi = twirl_channel(ch, groups[n - 1]);
        TwirlCheck c;
        c.kind = "pauli";
        c.qubits = n;
        c.index = i;
        c.max_offdiag = chi.max_offdiag();
        c.min_diag = chi.chi(0, 0).real();
        for (Eigen::Index k = 0; k < chi.chi.rows(); k++) {
            c.diag_imag = std::max(c.diag_imag, std::abs(chi.chi(k, k).imag()));
            c.min_diag = std::min(c.min_diag, chi.chi(k, k).real());
        }
        c.diag_sum = chi.diag_sum();
        c.trace_error = std::abs(c.diag_sum - 1.0);
        out.push_back(c);
    }
    return out;
}

std::vector<TwirlCheck> verify_magic_twirl(size_t count, uint64_t seed) {
    std::vector<TwirlCheck> out;
    const MagicStateKind kinds[] = {MagicStateKind::Plus, MagicStateKind::PiOver4, MagicStateKind::PiOver2,
                                    MagicStateKind::Pi};
    for (size_t i = 0; i < count; i++) {
        for (MagicStateKind kind : kinds) {
            Rng rng(derive_seed(seed, i, (uint64_t)kind));
            // Arbitrary noise: mix the ideal state with a random full-rank state.
            Eigen::Matrix2cd g;
            for (int r = 0; r < 2; r++) {
                for (int s = 0; s < 2; s++) g(r, s) = {rng.normal(), rng.normal()};
            }
            Eigen::Matrix2cd sigma = g * g.adjoint();
            sigma /= sigma.trace().real();
            Eigen::Vector2cd v = ideal_magic_state(kind);
            double lambda = rng.uniform();
            Eigen::Matrix2cd rho = (1 - lambda) * v * v.adjoint() + lambda * sigma;
            Eigen::Matrix2cd tw = twirl_magic_state(rho, kind);
            Eigen::Matrix2cd basis;
            basis.col(0) = v;
            basis.col(1) = Eigen::Vector2cd(v(0), -v(1));
            Eigen::Matrix2cd m = basis.adjoint() * tw * basis;
            TwirlCheck c;
            c.kind = to_string(kind);
            c.qubits = 1;
            c.index = i;
            c.max_offdiag = std::max(std::abs(m(0, 1)), std::abs(m(1, 0)));
            c.diag_imag = std::max(std::abs(m(0, 0).imag()), std::abs(m(1, 1).imag()));
            c.diag_sum = m.trace().real();
            c.trace_error = std::abs(c.diag_sum - 1.0);
            c.min_diag = std::min(m(0, 0).real(), m(1, 1).real());
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace lacc
