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

#include "lacc/experiments/sweeps.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "lacc/circuit_ir/builders.h"
#include "lacc/frame_simulator/trap_shot.h"

namespace lacc {

std::string to_string(CircuitFamily family) {
    return family == CircuitFamily::IQP ? "iqp" : "trotter";
}

CircuitFamily circuit_family_from_string(const std::string &text) {
    if (text == "iqp") return CircuitFamily::IQP;
    if (text == "trotter") return CircuitFamily::Trotter;
    throw std::invalid_argument("unknown circuit family '" + text + "' (expected iqp or trotter)");
}

LogicalCircuit sweep_target(CircuitFamily family, size_t n, size_t layers, uint64_t seed) {
    Rng rng(seed);
    if (family == CircuitFamily::IQP) return build_iqp(n, layers, rng);
    if (n < 2) throw std::invalid_argument("sweep_target: Trotter circuits need at least 2 qubits");
    TrotterOptions opt;
    opt.pack = true;
    LogicalCircuit c = build_trotter(heisenberg_chain(n, 1.0, 1.0, rng), 1.0, 1, opt);
    return resize_blocks(c, layers);
}

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

void check_distance(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("code distances must be odd and at least 3");
}

uint64_t key_of(size_t n, size_t layers, double p) {
    return derive_seed(derive_seed(n, layers), std::bit_cast<uint64_t>(p));
}

struct Stats {
    double mean = 0;
    double std = 0;
};

Stats mean_std(const std::vector<double> &v) {
    Stats s;
    for (double x : v) s.mean += x;
    s.mean /= (double)v.size();
    if (v.size() > 1) {
        double acc = 0;
        for (double x : v) acc += (x - s.mean) * (x - s.mean);
        s.std = std::sqrt(acc / (double)(v.size() - 1));
    }
    return s;
}

Stats gamma_stats(const SweepSpec &spec, const LogicalCircuit &target, const RegimeConfig &regime,
                  uint64_t point_seed) {
    ProtocolOptions opt;
    opt.threads = spec.threads;
    NoiseSpec noise = protocol_noise_spec(regime, opt);
    std::vector<double> gammas;
    for (uint64_t r = 0; r < spec.repetitions; r++) {
        uint64_t fails =
            count_failed_traps(target, noise, spec.traps, spec.construction, derive_seed(point_seed, r), opt);
        gammas.push_back(gamma_from_counts(fails, spec.traps, spec.soundness.beta));
    }
    return mean_std(gammas);
}

template <typename F>
void for_each_target(const SweepSpec &spec, F &&f) {
    for (size_t n : spec.qubits) {
        for (size_t layers : spec.layers) {
            LogicalCircuit target = sweep_target(spec.family, n, layers, derive_seed(spec.seed, n, layers));
            f(n, layers, target);
        }
    }
}

std::vector<std::string> base_cells(Regime regime, size_t n, size_t layers, double p, int d) {
    return {to_string(regime), std::to_string(n), std::to_string(layers), format_number(p), std::to_string(d)};
}

}  // namespace

void SweepSpec::validate() const {
    if (qubits.empty() || layers.empty() || p_phys.empty() || regimes.empty()) {
        throw std::invalid_argument("sweep: qubits, layers, p_phys and regimes must be non-empty");
    }
    for (size_t n : qubits) {
        if (n < 1) throw std::invalid_argument("sweep: qubit counts must be positive");
    }
    for (size_t l : layers) {
        if (l < 1) throw std::invalid_argument("sweep: layer counts must be positive");
    }
    for (double p : p_phys) check_probability(p, "p_phys");
    for (double p : t_gate_errors) check_probability(p, "t_gate_error");
    for (int d : distances) check_distance(d);
    if (traps < 1 || repetitions < 1) throw std::invalid_argument("sweep: traps and repetitions must be positive");
    if (soundness.lemma == SoundnessLemma::Lemma4 && construction != TrapConstruction::Modified) {
        throw ConfigError("lemma4 soundness requires the modified trap construction");
    }
}

ordered_json SweepSpec::to_json() const {
    ordered_json j;
    j["family"] = to_string(family);
    j["qubits"] = qubits;
    j["layers"] = layers;
    j["p_phys"] = p_phys;
    j["distances"] = distances;
    std::vector<std::string> r;
    for (Regime g : regimes) r.push_back(to_string(g));
    j["regimes"] = r;
    j["t_gate_errors"] = t_gate_errors;
    j["traps"] = traps;
    j["repetitions"] = repetitions;
    j["seed"] = seed;
    j["soundness"] = to_string(soundness.lemma);
    j["construction"] = to_string(construction);
    return j;
}

CsvTable regime_sweep(const SweepSpec &spec) {
    spec.validate();
    CsvTable table({"regime", "n", "layers", "p_phys", "d", "gamma_mean", "gamma_std"});
    for_each_target(spec, [&](size_t n, size_t layers, const LogicalCircuit &target) {
        for (double p : spec.p_phys) {
            uint64_t point = derive_seed(spec.seed, key_of(n, layers, p));
            for (Regime regime : spec.regimes) {
                std::vector<int> ds = regime == Regime::NISQ ? std::vector<int>{0} : spec.distances;
                if (ds.empty()) throw std::invalid_argument("sweep: fault-tolerant regimes need distances");
                for (int d : ds) {
                    RegimeConfig cfg;
                    cfg.regime = regime;
                    cfg.p_phys = p;
                    cfg.distance = regime == Regime::NISQ ? 3 : d;
                    Stats s = gamma_stats(spec, target, cfg, point);
                    auto row = base_cells(regime, n, layers, p, d);
                    row.push_back(format_number(s.mean));
                    row.push_back(format_number(s.std));
                    table.add_row(std::move(row));
                }
            }
        }
    });
    table.sort_by({0, 1, 2, 3, 4});
    return table;
}

CsvTable distance_sweep(const SweepSpec &spec) {
    SweepSpec s = spec;
    s.regimes.clear();
    for (Regime r : spec.regimes) {
        if (r != Regime::NISQ) s.regimes.push_back(r);
    }
    if (s.regimes.empty()) s.regimes = {Regime::PFTQC, Regime::FTQC};
    return regime_sweep(s);
}

CsvTable magic_quality_sweep(const SweepSpec &spec) {
    spec.validate();
    if (spec.t_gate_errors.empty()) throw std::invalid_argument("magic sweep: t_gate_errors must be non-empty");
    CsvTable table({"regime", "n", "layers", "p_phys", "d", "t_gate_error", "gamma_mean", "gamma_std"});
    for_each_target(spec, [&](size_t n, size_t layers, const LogicalCircuit &target) {
        for (double p : spec.p_phys) {
            uint64_t point = derive_seed(spec.seed, key_of(n, layers, p));
            for (Regime regime : spec.regimes) {
                if (regime == Regime::NISQ) continue;
                for (int d : spec.distances) {
                    for (double te : spec.t_gate_errors) {
                        RegimeConfig cfg;
                        cfg.regime = regime;
                        cfg.p_phys = p;
                        cfg.distance = d;
                        cfg.t_gate_error = te;
                        Stats s = gamma_stats(spec, target, cfg, point);
                        auto row = base_cells(regime, n, layers, p, d);
                        row.push_back(format_number(te));
                        row.push_back(format_number(s.mean));
                        row.push_back(format_number(s.std));
                        table.add_row(std::move(row));
                    }
                }
            }
        }
    });
    table.sort_by({0, 1, 2, 3, 4, 5});
    return table;
}

uint64_t max_t_count(double eps_t, double budget) {
    if (!(eps_t > 0 && eps_t < 1)) throw std::invalid_argument("max_t_count: eps_T must lie in (0, 1)");
    if (!(budget > 0 && budget < 1)) throw std::invalid_argument("max_t_count: budget must lie in (0, 1)");
    return (uint64_t)std::floor(std::log1p(-budget) / std::log1p(-eps_t));
}

double t_error_for_count(uint64_t count, double budget) {
    if (count == 0) throw std::invalid_argument("t_error_for_count: count must be positive");
    return -std::expm1(std::log1p(-budget) / (double)count);
}

CsvTable iqp_advantage_region(const std::vector<double> &eps_grid, double budget) {
    CsvTable table({"epsilon_T", "max_T_count", "classical_T_limit", "advantage"});
    for (double eps : eps_grid) {
        uint64_t n = max_t_count(eps, budget);
        table.add_row({format_number(eps), std::to_string(n), std::to_string(kClassicalTLimit),
                       n > kClassicalTLimit ? "1" : "0"});
    }
    table.sort_by({0});
    return table;
}

double fp_stab_analytic(size_t k, double p) {
    return std::pow(1.0 - 2.0 * p / 3.0, (double)k) - std::pow(1.0 - p, (double)k);
}

void FalsePositiveSpec::validate() const {
    if (qubits.empty() || p.empty()) throw std::invalid_argument("false positives: empty grid");
    for (double x : p) check_probability(x, "p");
    if (layers < 1 || shots < 1 || shots_per_trap < 1) {
        throw std::invalid_argument("false positives: layers, shots and shots_per_trap must be positive");
    }
    if (regime != Regime::NISQ) check_distance(distance);
}

ordered_json FalsePositiveSpec::to_json() const {
    ordered_json j;
    j["qubits"] = qubits;
    j["p"] = p;
    j["layers"] = layers;
    j["regime"] = to_string(regime);
    j["distance"] = distance;
    j["shots"] = shots;
    j["shots_per_trap"] = shots_per_trap;
    j["seed"] = seed;
    return j;
}

namespace {

struct FpCounts {
    uint64_t total = 0, stab = 0, canc = 0;
    // Split by whether some error would have been detected on its own.
    uint64_t stab_single = 0, canc_multi = 0;
};

FpCounts fp_chunk(const LogicalCircuit &target, const NoiseSpec &noise, uint64_t seed, uint64_t shots) {
    Rng rng(seed);
    TrapPair pair = compile_trap(target, TrapConstruction::Standard, false, rng);
    CompiledTrap trap(pair.first, noise);
    FpCounts c;
    std::vector<NoiseHit> hits, single(1);
    for (uint64_t s = 0; s < shots; s++) {
        trap.sampler().sample(rng, hits);
        if (hits.empty() || trap.program().run(hits)) continue;
        c.total++;
        (trap.program().final_frame(hits).is_identity() ? c.canc : c.stab)++;
        bool any_alone = false;
        for (const NoiseHit &h : hits) {
            single[0] = h;
            if (trap.program().run(single)) {
                any_alone = true;
                break;
            }
        }
        (any_alone ? c.canc_multi : c.stab_single)++;
    }
    return c;
}

}  // namespace

CsvTable false_positive_analysis(const FalsePositiveSpec &spec) {
    spec.validate();
    CsvTable table({"n", "p", "fp_total", "fp_stab", "fp_canc", "fp_stab_analytic", "k", "shots", "fp_stab_single",
                    "fp_canc_multi"});
    for (size_t n : spec.qubits) {
        LogicalCircuit target =
            sweep_target(CircuitFamily::IQP, n, spec.layers, derive_seed(spec.seed, n, spec.layers));
        for (double p : spec.p) {
            RegimeConfig regime;
            regime.regime = spec.regime;
            regime.p_phys = p;
            regime.distance = spec.regime == Regime::NISQ ? 3 : spec.distance;
            NoiseSpec noise;
            noise.regime = regime;
            noise.locality = NoiseLocality::PerQubit;

            // Location count and analytic value from one representative trap; every
            // standard trap of this target has the same locations.
            Rng probe(derive_seed(spec.seed, key_of(n, spec.layers, p), ~0ull));
            TrapPair rep = compile_trap(target, TrapConstruction::Standard, false, probe);
            NoisePlan plan = build_noise_plan(rep.first.circuit, noise);
            double keep = 1, stab_or_keep = 1;
            for (size_t i = 0; i < plan.locations.size(); i++) {
                double q = plan.channel_at(i).total_error_rate();
                keep *= 1 - q;
                stab_or_keep *= 1 - 2 * q / 3;
            }
            double analytic = stab_or_keep - keep;

            uint64_t point = derive_seed(spec.seed, key_of(n, spec.layers, p));
            uint64_t chunks = (spec.shots + spec.shots_per_trap - 1) / spec.shots_per_trap;
            std::vector<FpCounts> counts(chunks);
            std::atomic<uint64_t> next{0};
            auto worker = [&]() {
                for (uint64_t c = next++; c < chunks; c = next++) {
                    uint64_t len = std::min(spec.shots_per_trap, spec.shots - c * spec.shots_per_trap);
                    counts[c] = fp_chunk(target, noise, derive_seed(point, c), len);
                }
            };
            size_t threads = std::max<size_t>(1, std::min<size_t>(spec.threads, chunks));
            if (threads == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (size_t t = 0; t < threads; t++) pool.emplace_back(worker);
                for (auto &th : pool) th.join();
            }
            FpCounts sum;
            for (const auto &c : counts) {
                sum.total += c.total;
                sum.stab += c.stab;
                sum.canc += c.canc;
                sum.stab_single += c.stab_single;
                sum.canc_multi += c.canc_multi;
            }
            double shots = (double)spec.shots;
            table.add_row({std::to_string(n), format_number(p), format_number(sum.total / shots),
                           format_number(sum.stab / shots), format_number(sum.canc / shots), format_number(analytic),
                           std::to_string(plan.locations.size()), std::to_string(spec.shots),
                           format_number(sum.stab_single / shots), format_number(sum.canc_multi / shots)});
        }
    }
    table.sort_by({0, 1});
    return table;
}

void ResourceSpec::validate() const {
    if (logical_qubits < 1 || layers.empty()) throw std::invalid_argument("resources: need qubits and layers");
    check_probability(p_phys, "p_phys");
    if (!(tvd_budget > 0 && tvd_budget < 1)) throw std::invalid_argument("resources: budget must lie in (0, 1)");
    check_distance(d_max);
}

ordered_json ResourceSpec::to_json() const {
    ordered_json j;
    j["logical_qubits"] = logical_qubits;
    j["layers"] = layers;
    j["p_phys"] = p_phys;
    j["tvd_budget"] = tvd_budget;
    j["d_max"] = d_max;
    j["factory_patches"] = factory_patches;
    j["seed"] = seed;
    return j;
}

uint64_t physical_qubits(Regime regime, size_t n, int d, size_t factory_patches) {
    uint64_t patch = 2ull * (uint64_t)d * (uint64_t)d;
    switch (regime) {
        case Regime::NISQ:
            return n;
        case Regime::PFTQC:
            return n * patch;
        case Regime::FTQC:
            return (n + factory_patches) * patch;
    }
    return 0;
}

double predicted_error_rate(const LogicalCircuit &target, const RegimeConfig &regime) {
    NoiseSpec noise;
    noise.regime = regime;
    return build_noise_plan(target, noise).total_error_rate();
}

CsvTable resource_crossover(const ResourceSpec &spec) {
    spec.validate();
    CsvTable table({"layers", "regime", "min_distance", "min_physical_qubits", "optimal_regime"});
    for (size_t layers : spec.layers) {
        LogicalCircuit target = sweep_target(CircuitFamily::IQP, spec.logical_qubits, layers,
                                             derive_seed(spec.seed, spec.logical_qubits, layers));
        struct Option {
            Regime regime;
            int d = -1;
            int64_t qubits = -1;
        };
        std::vector<Option> options;
        for (Regime regime : {Regime::NISQ, Regime::PFTQC, Regime::FTQC}) {
            Option o{regime};
            RegimeConfig cfg;
            cfg.regime = regime;
            cfg.p_phys = spec.p_phys;
            if (regime == Regime::NISQ) {
                if (predicted_error_rate(target, cfg) <= spec.tvd_budget) {
                    o.d = 0;
                    o.qubits = (int64_t)physical_qubits(regime, spec.logical_qubits, 0);
                }
            } else {
                for (int d = 3; d <= spec.d_max; d += 2) {
                    cfg.distance = d;
                    if (predicted_error_rate(target, cfg) <= spec.tvd_budget) {
                        o.d = d;
                        o.qubits = (int64_t)physical_qubits(regime, spec.logical_qubits, d, spec.factory_patches);
                        break;
                    }
                }
            }
            options.push_back(o);
        }
        std::string best = "none";
        int64_t best_q = -1;
        for (const Option &o : options) {
            if (o.qubits >= 0 && (best_q < 0 || o.qubits < best_q)) {
                best_q = o.qubits;
                best = to_string(o.regime);
            }
        }
        for (const Option &o : options) {
            table.add_row({std::to_string(layers), to_string(o.regime), std::to_string(o.d),
                           std::to_string(o.qubits), best});
        }
    }
    table.sort_by({0});
    return table;
}

}  // namespace lacc
