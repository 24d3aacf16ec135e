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

#include "lacc/randomized_compiling/magic_twirl.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lacc {

std::string to_string(MagicStateKind kind) {
    switch (kind) {
        case MagicStateKind::Plus:
            return "plus";
        case MagicStateKind::PiOver4:
            return "pi_over_4";
        case MagicStateKind::PiOver2:
            return "pi_over_2";
        case MagicStateKind::Pi:
            return "pi";
    }
    return "?";
}

MagicStateKind magic_state_kind_from_string(const std::string &text) {
    for (MagicStateKind k :
         {MagicStateKind::Plus, MagicStateKind::PiOver4, MagicStateKind::PiOver2, MagicStateKind::Pi}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("unknown magic state variant '" + text + "'");
}

Eigen::Vector2cd ideal_magic_state(MagicStateKind kind) {
    double theta = 0;
    switch (kind) {
        case MagicStateKind::Plus:
            theta = 0;
            break;
        case MagicStateKind::PiOver4:
            theta = std::numbers::pi / 4;
            break;
        case MagicStateKind::PiOver2:
            theta = std::numbers::pi / 2;
            break;
        case MagicStateKind::Pi:
            theta = std::numbers::pi;
            break;
    }
    Eigen::Vector2cd v;
    v << 1, std::polar(1.0, theta);
    return v / std::sqrt(2.0);
}

Eigen::Matrix2cd magic_twirl_gate(MagicStateKind kind) {
    Eigen::Matrix2cd x, z;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    switch (kind) {
        case MagicStateKind::Plus:
        case MagicStateKind::Pi:
            return x;
        case MagicStateKind::PiOver2:
            return z * x;
        case MagicStateKind::PiOver4: {
            Eigen::Vector2cd v = ideal_magic_state(kind);
            Eigen::Matrix2cd proj = v * v.adjoint();
            return proj - z * proj * z;
        }
    }
    return Eigen::Matrix2cd::Identity();
}

Eigen::Matrix2cd twirl_magic_state(const Eigen::Matrix2cd &rho, MagicStateKind kind) {
    const double tol = 1e-9;
    if (std::abs(rho.trace() - 1.0) > tol || (rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("twirl_magic_state: not a density matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es((rho + rho.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("twirl_magic_state: not positive semidefinite");
    }
    Eigen::Matrix2cd g = magic_twirl_gate(kind);
    return (rho + g * rho * g.adjoint()) / 2.0;
}

double magic_state_infidelity(const Eigen::Matrix2cd &rho, MagicStateKind kind) {
    Eigen::Vector2cd v = ideal_magic_state(kind);
    return 1.0 - (v.adjoint() * rho * v).value().real();
}

}  // namespace lacc
