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

#ifndef LACC_EXPERIMENTS_SWEEPS_H
#define LACC_EXPERIMENTS_SWEEPS_H

#include <cstdint>
#include <string>
#include <vector>

#include "lacc/accreditation/protocol.h"
#include "lacc/circuit_ir/circuit.h"
#include "lacc/experiments/output.h"
#include "lacc/noise_models/regime.h"

namespace lacc {

enum class CircuitFamily { IQP, Trotter };

std::string to_string(CircuitFamily family);
CircuitFamily circuit_family_from_string(const std::string &text);

/// Target used by every sweep: a random IQP circuit, or a second-order
/// Heisenberg-chain product formula cut to `layers` blocks.
LogicalCircuit sweep_target(CircuitFamily family, size_t n, size_t layers, uint64_t seed);

struct SweepSpec {
    CircuitFamily family = CircuitFamily::IQP;
    std::vector<size_t> qubits{5};
    std::vector<size_t> layers{40};
    std::vector<double> p_phys{1e-3};
    std::vector<int> distances{11};
    std::vector<Regime> regimes{Regime::NISQ, Regime::PFTQC, Regime::FTQC};
    /// Magic-quality sweep only.
    std::vector<double> t_gate_errors;
    uint64_t traps = 500;
    uint64_t repetitions = 5;
    uint64_t seed = 0;
    SoundnessParams soundness = SoundnessParams::lemma3();
    TrapConstruction construction = TrapConstruction::Standard;
    size_t threads = 1;

    void validate() const;
    ordered_json to_json() const;
};

/// Columns: regime, n, layers, p_phys, d, gamma_mean, gamma_std.
CsvTable regime_sweep(const SweepSpec &spec);

/// regime_sweep over PFTQC/FTQC only.
CsvTable distance_sweep(const SweepSpec &spec);

/// Columns: regime, n, layers, p_phys, d, t_gate_error, gamma_mean, gamma_std.
CsvTable magic_quality_sweep(const SweepSpec &spec);

/// Largest T count with 1 - (1 - eps_t)^N <= budget.
uint64_t max_t_count(double eps_t, double budget);

/// eps_t at which max_t_count drops below `count` (closed form of the boundary).
double t_error_for_count(uint64_t count, double budget);

constexpr double kAdvantageBudget = 1.0 / 192.0;
constexpr uint64_t kClassicalTLimit = 50;

/// Columns: epsilon_T, max_T_count, classical_T_limit, advantage.
CsvTable iqp_advantage_region(const std::vector<double> &eps_grid, double budget = kAdvantageBudget);

/// (1 - 2p/3)^k - (1 - p)^k.
double fp_stab_analytic(size_t k, double p);

struct FalsePositiveSpec {
    std::vector<size_t> qubits{5};
    std::vector<double> p{1e-3};
    size_t layers = 40;
    Regime regime = Regime::NISQ;
    int distance = 11;
    uint64_t shots = 20000;
    /// Shots run on each trap before a fresh one is drawn.
    uint64_t shots_per_trap = 50;
    uint64_t seed = 0;
    size_t threads = 1;

    void validate() const;
    ordered_json to_json() const;
};

/// Per grid point: single-circuit trap shots under single-qubit depolarizing
/// noise at every location. An undetected shot with errors counts as
/// stabilisation when its final frame is a nontrivial Z-type Pauli and as
/// cancellation when the frame is the identity. fp_stab_single / fp_canc_multi
/// split the same shots by whether every error alone leaves the output
/// unchanged, which is the event the closed form counts.
/// Columns: n, p, fp_total, fp_stab, fp_canc, fp_stab_analytic, k, shots,
/// fp_stab_single, fp_canc_multi.
CsvTable false_positive_analysis(const FalsePositiveSpec &spec);

struct ResourceSpec {
    size_t logical_qubits = 10;
    std::vector<size_t> layers{10, 100, 1000};
    double p_phys = 1e-5;
    double tvd_budget = 1.0 / 384.0;
    int d_max = 51;
    /// Patch-equivalents added per FTQC instance for magic-state factories.
    size_t factory_patches = 15;
    uint64_t seed = 0;

    void validate() const;
    ordered_json to_json() const;
};

/// Physical qubits used by n logical qubits at distance d.
uint64_t physical_qubits(Regime regime, size_t n, int d, size_t factory_patches = 15);

/// Model error rate 1 - prod (1 - q_j) of an IQP target over its noise locations.
double predicted_error_rate(const LogicalCircuit &target, const RegimeConfig &regime);

/// Columns: layers, regime, min_distance, min_physical_qubits, optimal_regime.
/// Unviable regimes report min_distance -1 and min_physical_qubits -1.
CsvTable resource_crossover(const ResourceSpec &spec);

}  // namespace lacc

#endif
