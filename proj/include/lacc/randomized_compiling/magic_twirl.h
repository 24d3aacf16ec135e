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

#ifndef LACC_RANDOMIZED_COMPILING_MAGIC_TWIRL_H
#define LACC_RANDOMIZED_COMPILING_MAGIC_TWIRL_H

#include <Eigen/Dense>
#include <string>

namespace lacc {

/// Single-qubit magic states |theta> = (|0> + e^{i theta}|1>)/sqrt(2); Plus is |+>.
enum class MagicStateKind { Plus, PiOver4, PiOver2, Pi };

std::string to_string(MagicStateKind kind);
MagicStateKind magic_state_kind_from_string(const std::string &text);

Eigen::Vector2cd ideal_magic_state(MagicStateKind kind);

/// Non-identity element of the two-element twirl set: X for Plus and Pi, ZX for
/// PiOver2, and |v><v| - Z|v><v|Z for PiOver4.
Eigen::Matrix2cd magic_twirl_gate(MagicStateKind kind);

/// (rho + G rho G^dag) / 2 for the variant's gate G. Throws on an invalid density matrix.
Eigen::Matrix2cd twirl_magic_state(const Eigen::Matrix2cd &rho, MagicStateKind kind);

/// 1 - <v|rho|v>.
double magic_state_infidelity(const Eigen::Matrix2cd &rho, MagicStateKind kind);

}  // namespace lacc

#endif
