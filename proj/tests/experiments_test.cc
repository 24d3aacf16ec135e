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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lacc/experiments/output.h"
#include "lacc/experiments/sweeps.h"
#include "lacc/noise_models/regime.h"
#include "test_util.h"

using namespace lacc;
using namespace lacc_test;

namespace {

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("lacc_experiments_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

SweepSpec small_spec() {
    SweepSpec s;
    s.qubits = {3};
    s.layers = {6};
    s.p_phys = {1e-3};
    s.distances = {3};
    s.traps = 200;
    s.repetitions = 3;
    s.seed = 21;
    return s;
}

}  // namespace

TEST(experiments, number_format_round_trips) {
    ASSERT_EQ(format_number(0), "0");
    ASSERT_EQ(format_number(0.1), "0.1");
    ASSERT_EQ(format_number(1e-3), "0.001");
    ASSERT_EQ(format_number(3), "3");
    Rng rng = independent_test_rng();
    for (int i = 0; i < 1000; i++) {
        double v = std::ldexp(rng.uniform(), (int)rng.below(60) - 30);
        ASSERT_EQ(std::stod(format_number(v)), v);
    }
}

TEST(experiments, csv_table) {
    CsvTable t({"a", "b"});
    t.add_row({"10", "x"});
    t.add_row({"9", "y"});
    t.add_row({"9", "a"});
    ASSERT_THROW(t.add_row({"1"}), std::invalid_argument);
    t.sort_by({0, 1});
    ASSERT_EQ(t.to_csv(), "a,b\n9,a\n9,y\n10,x\n");
    ASSERT_EQ(t.number(2, "a"), 10);
    ASSERT_EQ(t.at(0, "b"), "a");
    ASSERT_THROW(t.at(0, "c"), std::out_of_range);
    ASSERT_EQ(t.to_json()[0]["a"], 9);
}

TEST(experiments, git_blob_hash) {
    ASSERT_EQ(git_blob_sha1("hello\n"), "ce013625030ba8dba906f756967f9e9ca394464a");
    ASSERT_EQ(git_blob_sha1(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
}

TEST(experiments, manifest_records_hash_and_creates_directory) {
    auto dir = scratch_dir("manifest") / "nested";
    CsvTable t({"x"});
    t.add_row({"1"});
    ordered_json info;
    info["seed"] = 3;
    auto path = write_table(dir, "demo", t, info);
    ASSERT_TRUE(std::filesystem::exists(path));
    auto manifest = ordered_json::parse(slurp(dir / "demo.manifest.json"));
    ASSERT_EQ(manifest["sha1"], git_blob_sha1(slurp(path)));
    ASSERT_EQ(manifest["file"], "demo.csv");
    ASSERT_EQ(manifest["info"]["seed"], 3);
    auto jpath = write_table(dir, "demo_json", t, info, true);
    ASSERT_EQ(ordered_json::parse(slurp(jpath))[0]["x"], 1);
}

TEST(experiments, max_t_count_closed_form) {
    ASSERT_EQ(max_t_count(1e-4, 1.0 / 192), 52u);
    ASSERT_EQ(max_t_count(0.01, 1.0 / 192), 0u);
    ASSERT_EQ(max_t_count(0.5, 1.0 / 192), 0u);
    ASSERT_THROW(max_t_count(0, 0.1), std::invalid_argument);
    // Brute force: count gates while the accumulated error stays within budget.
    for (double eps : {1e-5, 3e-5, 1e-4, 2e-4, 1e-3}) {
        uint64_t n = 0;
        while (1 - std::pow(1 - eps, (double)(n + 1)) <= 1.0 / 192) n++;
        ASSERT_EQ(max_t_count(eps, 1.0 / 192), n) << eps;
    }
    double cross = t_error_for_count(50, 1.0 / 192);
    ASSERT_GT(cross, 1.0e-4);
    ASSERT_LT(cross, 1.1e-4);
    ASSERT_EQ(max_t_count(cross * (1 - 1e-9), 1.0 / 192), 50u);
    ASSERT_EQ(max_t_count(cross * (1 + 1e-6), 1.0 / 192), 49u);
    CsvTable region = iqp_advantage_region({2e-4, 1e-4, 5e-5});
    ASSERT_EQ(region.size(), 3u);
    ASSERT_EQ(region.at(0, "epsilon_T"), "5e-05");
    ASSERT_EQ(region.at(1, "max_T_count"), "52");
    ASSERT_EQ(region.at(1, "advantage"), "1");
    ASSERT_EQ(region.at(2, "advantage"), "0");
    ASSERT_EQ(region.at(2, "classical_T_limit"), "50");
}

TEST(experiments, fp_stab_analytic_value) {
    ASSERT_NEAR(fp_stab_analytic(600, 1e-3), 0.1216, 5e-5);
    ASSERT_EQ(fp_stab_analytic(600, 0), 0);
    ASSERT_EQ(fp_stab_analytic(0, 0.1), 0);
}

TEST(experiments, false_positive_monte_carlo_matches_analytic) {
    FalsePositiveSpec spec;
    spec.qubits = {3};
    spec.layers = 6;
    spec.p = {0, 0.004, 0.02};
    spec.shots = 30000;
    spec.seed = 4;
    CsvTable t = false_positive_analysis(spec);
    ASSERT_EQ(t.size(), 3u);
    ASSERT_EQ(t.number(0, "fp_total"), 0);
    ASSERT_EQ(t.number(0, "fp_stab_analytic"), 0);
    for (size_t r = 1; r < 3; r++) {
        double analytic = t.number(r, "fp_stab_analytic");
        double k = t.number(r, "k");
        ASSERT_NEAR(analytic, fp_stab_analytic((size_t)k, t.number(r, "p")), 1e-12);
        double sigma = std::sqrt(analytic * (1 - analytic) / spec.shots);
        ASSERT_NEAR(t.number(r, "fp_stab_single"), analytic, 3 * sigma) << r;
        ASSERT_NEAR(t.number(r, "fp_total"), t.number(r, "fp_stab") + t.number(r, "fp_canc"), 1e-12);
        ASSERT_NEAR(t.number(r, "fp_total"), t.number(r, "fp_stab_single") + t.number(r, "fp_canc_multi"), 1e-12);
        ASSERT_LT(t.number(r, "fp_canc"), t.number(r, "fp_stab") / 10) << r;
    }
    // At low rate almost every undetected shot has one Z-type error, so the
    // frame split agrees with the closed form too.
    ASSERT_NEAR(t.number(1, "fp_stab"), t.number(1, "fp_stab_analytic"),
                3 * std::sqrt(t.number(1, "fp_stab_analytic") / spec.shots));
    // Deterministic and thread independent.
    FalsePositiveSpec threaded = spec;
    threaded.threads = 3;
    ASSERT_EQ(false_positive_analysis(threaded).to_csv(), t.to_csv());
}

TEST(experiments, regime_sweep_rows_and_determinism) {
    SweepSpec s = small_spec();
    s.p_phys = {1e-3, 2e-3};
    CsvTable t = regime_sweep(s);
    // NISQ once per p, each FT regime once per (p, d).
    ASSERT_EQ(t.size(), 2u * 3);
    ASSERT_EQ(t.header(), (std::vector<std::string>{"regime", "n", "layers", "p_phys", "d", "gamma_mean", "gamma_std"}));
    s.threads = 2;
    ASSERT_EQ(regime_sweep(s).to_csv(), t.to_csv());
    for (size_t r = 0; r < t.size(); r++) {
        if (t.at(r, "regime") == "NISQ") ASSERT_EQ(t.at(r, "d"), "0");
        ASSERT_GE(t.number(r, "gamma_mean"), 0);
    }
}

TEST(experiments, regime_ordering_at_low_noise) {
    SweepSpec s = small_spec();
    s.qubits = {5};
    s.layers = {20};
    s.distances = {11};
    CsvTable t = regime_sweep(s);
    double g[3];
    for (size_t r = 0; r < t.size(); r++) {
        g[(int)regime_from_string(t.at(r, "regime"))] = t.number(r, "gamma_mean");
    }
    ASSERT_LT(g[(int)Regime::FTQC], g[(int)Regime::PFTQC]);
    ASSERT_LT(g[(int)Regime::PFTQC], g[(int)Regime::NISQ]);
}

TEST(experiments, gamma_falls_with_p_phys) {
    SweepSpec s = small_spec();
    s.regimes = {Regime::NISQ};
    s.p_phys = {1e-6, 1e-4, 1e-2};
    CsvTable t = regime_sweep(s);
    ASSERT_EQ(t.size(), 3u);
    ASSERT_LE(t.number(0, "gamma_mean"), t.number(1, "gamma_mean"));
    ASSERT_LE(t.number(1, "gamma_mean"), t.number(2, "gamma_mean"));
    ASSERT_LT(t.number(0, "gamma_mean"), 0.02);
}

TEST(experiments, distance_sweep_improves_below_threshold) {
    SweepSpec s = small_spec();
    s.regimes = {Regime::FTQC};
    s.distances = {3, 13};
    s.p_phys = {5e-3};
    CsvTable t = distance_sweep(s);
    ASSERT_EQ(t.size(), 2u);
    ASSERT_EQ(t.at(0, "d"), "3");
    ASSERT_LE(t.number(1, "gamma_mean"), t.number(0, "gamma_mean"));
    ASSERT_GT(t.number(0, "gamma_mean"), 0);
}

TEST(experiments, magic_sweep_matches_ftqc_when_t_error_is_logical_rate) {
    SweepSpec s = small_spec();
    s.p_phys = {5e-3};
    s.distances = {5};
    double pl = logical_error_rate(5e-3, 5);
    s.t_gate_errors = {pl, 0.05};
    s.regimes = {Regime::PFTQC};
    CsvTable magic = magic_quality_sweep(s);
    ASSERT_EQ(magic.size(), 2u);
    s.regimes = {Regime::FTQC};
    CsvTable ft = regime_sweep(s);
    ASSERT_EQ(magic.at(0, "gamma_mean"), ft.at(0, "gamma_mean"));
    ASSERT_GE(magic.number(1, "gamma_mean"), magic.number(0, "gamma_mean"));
    s.t_gate_errors.clear();
    ASSERT_THROW(magic_quality_sweep(s), std::invalid_argument);
}

TEST(experiments, spec_validation) {
    SweepSpec s = small_spec();
    s.distances = {4};
    ASSERT_THROW(regime_sweep(s), std::invalid_argument);
    s = small_spec();
    s.p_phys = {1.5};
    ASSERT_THROW(regime_sweep(s), std::invalid_argument);
    s = small_spec();
    s.soundness = SoundnessParams::lemma4();
    ASSERT_THROW(regime_sweep(s), ConfigError);
}

TEST(experiments, resource_crossover_regimes) {
    ASSERT_EQ(physical_qubits(Regime::PFTQC, 1, 11), 242u);
    ASSERT_EQ(physical_qubits(Regime::FTQC, 1, 11, 15), 16u * 242);
    ASSERT_EQ(physical_qubits(Regime::NISQ, 7, 11), 7u);
    ResourceSpec spec;
    spec.logical_qubits = 10;
    spec.layers = {1, 2000};
    CsvTable t = resource_crossover(spec);
    ASSERT_EQ(t.size(), 6u);
    ASSERT_EQ(t.at(0, "optimal_regime"), "NISQ");
    ASSERT_EQ(t.at(3, "optimal_regime"), "FTQC");
    // Deep circuits exhaust the unencoded magic budget of the partial scheme.
    for (size_t r = 3; r < 6; r++) {
        if (t.at(r, "regime") == "PFTQC" || t.at(r, "regime") == "NISQ") ASSERT_EQ(t.at(r, "min_distance"), "-1");
    }
    // The chosen distance is the smallest one under budget.
    LogicalCircuit target = sweep_target(CircuitFamily::IQP, 10, 2000, derive_seed(spec.seed, 10, 2000));
    int d = (int)t.number(5, "min_distance");
    RegimeConfig cfg;
    cfg.regime = Regime::FTQC;
    cfg.p_phys = spec.p_phys;
    cfg.distance = d;
    ASSERT_LE(predicted_error_rate(target, cfg), spec.tvd_budget);
    if (d > 3) {
        cfg.distance = d - 2;
        ASSERT_GT(predicted_error_rate(target, cfg), spec.tvd_budget);
    }
}
