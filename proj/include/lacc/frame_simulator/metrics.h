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

#ifndef LACC_FRAME_SIMULATOR_METRICS_H
#define LACC_FRAME_SIMULATOR_METRICS_H

#include <vector>

#include "lacc/frame_simulator/dense.h"

namespace lacc {

/// 1/2 sum_s |p(s) - q(s)|.
double exact_tvd(const std::vector<double> &p, const std::vector<double> &q);
/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double exact_fidelity(const DenseState &rho, const DenseState &sigma);
/// -(1/n) log2 Tr rho^2.
double exact_renyi2_density(const DenseState &rho);
/// Checks trace 1 and positivity within tol.
bool is_density_matrix(const DenseState &rho, double tol = 1e-9);

}  // namespace lacc

#endif
