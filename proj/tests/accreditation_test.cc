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

#include <gtest/gtest.h>

#include <cmath>

#include "lacc/accreditation/bounds.h"
#include "lacc/accreditation/protocol.h"
#include "lacc/circuit_ir/builders.h"
#include "lacc/frame_simulator/dense.h"
#include "lacc/frame_simulator/metrics.h"
#include "test_util.h"

using namespace lacc;
using namespace lacc_test;

namespace {

RegimeConfig nisq(double p) {
    RegimeConfig r;
    r.regime = Regime::NISQ;
    r.p_phys = p;
    return r;
}

// Hoeffding count written directly from the tail bound 2 exp(-M eps^2 / 2) per estimate.
uint64_t brute_required_traps(double eps, double alpha) {
    uint64_t m = 1;
    while (4 * std::exp(-(double)m * eps * eps / 2) > 1 - alpha) m++;
    return m;
}

}  // namespace

TEST(accreditation, required_traps_examples) {
    ASSERT_EQ(required_traps(0.05, 0.95), 3506u);
    ASSERT_EQ(required_traps(1.0, 0.95), 9u);
    ASSERT_EQ(required_traps(0.1, 1e-12), 278u);
    ASSERT_THROW(required_traps(0, 0.95), std::invalid_argument);
    ASSERT_THROW(required_traps(0.1, 1.0), std::invalid_argument);
    for (double eps : {0.03, 0.05, 0.1, 0.2, 0.5}) {
        for (double alpha : {0.5, 0.9, 0.95, 0.99}) {
            ASSERT_EQ(required_traps(eps, alpha), brute_required_traps(eps, alpha)) << eps << " " << alpha;
            ASSERT_LE(achieved_epsilon(required_traps(eps, alpha), alpha), eps);
        }
    }
}

TEST(accreditation, soundness_params) {
    ASSERT_EQ(SoundnessParams::from_beta(0).soundness, 0.5);
    ASSERT_EQ(SoundnessParams::from_beta(0.5).soundness, 0.75);
    ASSERT_EQ(SoundnessParams::from_beta(0.875).soundness, 15.0 / 16);
    ASSERT_EQ(SoundnessParams::from_string("lemma4").lemma, SoundnessLemma::Lemma4);
    ASSERT_THROW(SoundnessParams::from_beta(0.3), std::invalid_argument);
    ASSERT_THROW(SoundnessParams::from_string("lemma5"), std::invalid_argument);
    for (auto s : {SoundnessParams::lemma2(), SoundnessParams::lemma3(), SoundnessParams::lemma4()}) {
        // 1 - soundness = (1 - beta) / 2.
        ASSERT_DOUBLE_EQ(1 - s.soundness, (1 - s.beta) / 2);
    }
}

TEST(accreditation, gamma_arithmetic_and_monotonicity) {
    ASSERT_DOUBLE_EQ(gamma_from_counts(25, 500, 0.5), 0.2);
    ASSERT_DOUBLE_EQ(gamma_from_counts(0, 500, 0.875), 0.0);
    ASSERT_THROW(gamma_from_counts(5, 4, 0), std::invalid_argument);
    ASSERT_THROW(gamma_from_counts(1, 0, 0), std::invalid_argument);
    double prev = -1;
    for (uint64_t k = 0; k <= 100; k++) {
        double g = gamma_from_counts(k, 100, 0.5);
        ASSERT_GE(g, prev);
        ASSERT_GE(g, gamma_from_counts(k, 100, 0.0));
        ASSERT_LE(g, gamma_from_counts(k, 100, 0.875));
        prev = g;
    }
}

TEST(accreditation, derived_bound_examples) {
    ASSERT_EQ(expectation_error_bound(0, 3), 0);
    ASSERT_DOUBLE_EQ(expectation_error_bound(0.1, 1), 0.2);
    ASSERT_THROW(expectation_error_bound(-0.1, 1), std::invalid_argument);
    ASSERT_EQ(infidelity_bound(0), 0);
    ASSERT_EQ(infidelity_bound(1), 1);
    ASSERT_EQ(entropy_density_bound(0, 5).value, 0);
    ASSERT_NEAR(entropy_density_bound(0.5, 1).value, -std::log2(0.375), 1e-12);
    ASSERT_NEAR(entropy_density_bound(0.5, 1).value, 1.4150, 1e-4);
    ASSERT_FALSE(entropy_density_bound(0.5, 1).saturated);
    ASSERT_TRUE(entropy_density_bound(1.0, 3).saturated);
    double prev = 0;
    for (double g = 0; g < 3; g += 0.01) {
        double v = entropy_density_bound(g, 4).value;
        ASSERT_GE(v, prev - 1e-15);
        prev = v;
    }
    // 0.8503 is ln(30) / 4, a factor-30 sampling overhead e^{4 N eps}.
    ASSERT_NEAR(kMitigationExponent, std::log(30.0) / 4, 1e-5);
    ASSERT_NEAR(mitigation_threshold(), 0.5727133, 1e-7);
    ASSERT_TRUE(mitigation_efficiency_check(0));
    ASSERT_TRUE(mitigation_efficiency_check(0.57));
    ASSERT_FALSE(mitigation_efficiency_check(0.58));
    ASSERT_FALSE(mitigation_efficiency_check(1));
}

TEST(accreditation, zero_noise_never_fails) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(4, 6, rng);
    for (auto construction : {TrapConstruction::Standard, TrapConstruction::Modified}) {
        AccreditationResult r =
            run_protocol(target, nisq(0), 300, SoundnessParams::lemma3(), construction, rng);
        ASSERT_EQ(r.n_inc, 0u);
        ASSERT_EQ(r.gamma, 0);
        ASSERT_TRUE(r.mitigation_ok);
        ASSERT_TRUE(r.target_output.has_value());
    }
}

TEST(accreditation, lemma4_requires_modified_traps) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(3, 3, rng);
    ASSERT_THROW(run_protocol(target, nisq(0.01), 10, SoundnessParams::lemma4(), TrapConstruction::Standard, rng),
                 ConfigError);
    AccreditationResult r =
        run_protocol(target, nisq(0.01), 10, SoundnessParams::lemma4(), TrapConstruction::Modified, rng);
    ASSERT_EQ(r.beta, 0.875);
    ASSERT_THROW(run_protocol(target, nisq(0.01), 0, SoundnessParams::lemma3(), TrapConstruction::Standard, rng),
                 ConfigError);
}

TEST(accreditation, deterministic_and_thread_independent) {
    Rng setup = independent_test_rng();
    LogicalCircuit target = build_iqp(5, 10, setup);
    ProtocolOptions one, four;
    four.threads = 4;
    Rng a(7), b(7);
    AccreditationResult ra = run_protocol(target, nisq(0.01), 400, SoundnessParams::lemma3(),
                                          TrapConstruction::Standard, a, one);
    AccreditationResult rb = run_protocol(target, nisq(0.01), 400, SoundnessParams::lemma3(),
                                          TrapConstruction::Standard, b, four);
    ASSERT_EQ(ra.to_json().dump(), rb.to_json().dump());
    ASSERT_GT(ra.n_inc, 0u);
    ordered_json j = ra.to_json();
    for (const char *key : {"m", "n_inc", "p_inc", "beta", "gamma", "epsilon", "alpha", "entropy_bound",
                            "infidelity_bound", "mitigation_ok", "seed", "regime"}) {
        ASSERT_TRUE(j.contains(key)) << key;
    }
    ASSERT_EQ(j["regime"]["regime"], "NISQ");
}

TEST(accreditation, pair_failure_matches_dense_oracle) {
    // Per-trap pair failure probability is 1 - (1 - f1)(1 - f2) with each f from
    // the dense oracle; the trap-averaged value is estimated from 200 exact traps.
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(3, 4, rng);
    RegimeConfig regime = nisq(0.004);
    ProtocolOptions opt;
    opt.twirl = false;
    NoiseSpec spec = protocol_noise_spec(regime, opt);
    double expected = 0;
    const int sample = 200;
    for (int i = 0; i < sample; i++) {
        TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, rng);
        double ok = 1;
        for (size_t v = 0; v < pair.size(); v++) {
            NoisePlan plan = build_noise_plan(pair[v].circuit, spec);
            ok *= exact_output_distribution(pair[v].circuit, &plan)[0];
        }
        expected += (1 - ok) / sample;
    }
    const uint64_t m = 20000;
    uint64_t fails = count_failed_traps(target, spec, m, TrapConstruction::Standard, 11, opt);
    double sigma = std::sqrt(expected * (1 - expected) / m);
    ASSERT_NEAR((double)fails / m, expected, 4 * sigma + 0.01 * expected);
}

TEST(accreditation, bounds_hold_against_dense_oracle) {
    Rng rng = independent_test_rng();
    for (int trial = 0; trial < 4; trial++) {
        LogicalCircuit target = build_iqp(3, 5, rng);
        RegimeConfig regime = nisq(0.002 + 0.004 * trial);
        ProtocolOptions opt;
        NoiseSpec spec = protocol_noise_spec(regime, opt);
        NoisePlan plan = build_noise_plan(target, spec);
        DenseState ideal = dense_output_state(target, nullptr);
        DenseState noisy = dense_output_state(target, &plan);
        std::vector<uint8_t> flips = target.layers.back().flips;
        std::vector<double> p_ideal = measurement_distribution(ideal, flips);
        std::vector<double> p_noisy = measurement_distribution(noisy, flips);
        double tvd = exact_tvd(p_ideal, p_noisy);

        AccreditationResult r = run_protocol(target, regime, required_traps(0.05, 0.95), SoundnessParams::lemma3(),
                                             TrapConstruction::Standard, rng, opt);
        ASSERT_LE(tvd, r.gamma + r.epsilon) << trial;
        ASSERT_LE(1 - exact_fidelity(ideal, noisy), r.infidelity_bound + 1e-12) << trial;
        ASSERT_LE(exact_renyi2_density(noisy), r.entropy_bound + 1e-12) << trial;
        // Z-string observables, operator norm 1.
        for (uint64_t mask = 1; mask < 8; mask++) {
            double e_ideal = 0, e_noisy = 0;
            for (uint64_t x = 0; x < 8; x++) {
                double s = (__builtin_popcountll(x & mask) & 1) ? -1 : 1;
                e_ideal += s * p_ideal[x];
                e_noisy += s * p_noisy[x];
            }
            ASSERT_LE(std::abs(e_ideal - e_noisy), expectation_error_bound(r.gamma + r.epsilon, 1));
        }
    }
}

TEST(accreditation, channel_override_moves_gamma_within_robustness_bound) {
    Rng rng = independent_test_rng();
    LogicalCircuit target = build_iqp(3, 4, rng);
    RegimeConfig regime = nisq(0.005);
    ProtocolOptions base;
    base.twirl = false;
    ProtocolOptions perturbed = base;
    // A single-qubit location right after preparation, made to flip with probability 0.1.
    perturbed.overrides.push_back({0, PauliChannel::single_pauli("X", 0.1)});
    NoiseSpec spec = protocol_noise_spec(regime, base);
    const uint64_t m = 3000;
    Rng probe(1);
    TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, probe);
    NoisePlan plan = build_noise_plan(pair.first.circuit, spec);
    ASSERT_EQ(plan.locations[0].qubits.size(), 1u);
    double delta = pauli_diamond_distance(plan.channel_at(0), PauliChannel::single_pauli("X", 0.1));
    // Two versions per trap, one changed channel each.
    std::vector<std::vector<ChannelPair>> pairs(m);
    for (auto &p : pairs) {
        ChannelPair cp{plan.placed(0), plan.placed(0)};
        cp.second.channel = PauliChannel::single_pauli("X", 0.1);
        p = {cp, cp};
    }
    double bound = robustness_bound(pairs, m);
    ASSERT_NEAR(bound, 2 * delta, 1e-12);
    uint64_t f0 = count_failed_traps(target, spec, m, TrapConstruction::Standard, 3, base);
    uint64_t f1 = count_failed_traps(target, spec, m, TrapConstruction::Standard, 3, perturbed);
    double g0 = gamma_from_counts(f0, m, 0), g1 = gamma_from_counts(f1, m, 0);
    double p = (double)(f0 + f1) / (2.0 * m);
    double sigma = 2 * std::sqrt(2 * p * (1 - p) / m);
    ASSERT_LE(std::abs(g0 - g1), bound + 3 * sigma);
    ASSERT_GT(g1, g0);
}
