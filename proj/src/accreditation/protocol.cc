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

#include "lacc/accreditation/protocol.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lacc/frame_simulator/dense.h"
#include "lacc/frame_simulator/trap_shot.h"
#include "lacc/randomized_compiling/twirl.h"

namespace lacc {

namespace {

constexpr uint64_t kChunk = 64;

bool run_one_trap(const LogicalCircuit &target, const NoiseSpec &spec, TrapConstruction construction, uint64_t seed,
                  const ProtocolOptions &options) {
    Rng rng(seed);
    TrapPair pair = compile_trap(target, construction, options.purified, rng, options.trap);
    std::vector<CompiledTrap> versions;
    versions.reserve(pair.size());
    for (size_t v = 0; v < pair.size(); v++) {
        TrapInstance trap = pair[v];
        if (options.twirl) trap.circuit = insert_twirls(trap.circuit, rng).first;
        NoisePlan plan = build_noise_plan(trap.circuit, spec);
        for (const ChannelOverride &o : options.overrides) {
            if (o.location >= plan.locations.size()) {
                throw ConfigError("channel override location out of range");
            }
            if (o.channel.weight() != plan.locations[o.location].qubits.size()) {
                throw ConfigError("channel override weight does not match the location");
            }
            plan.locations[o.location].channel = plan.intern(o.channel);
        }
        versions.emplace_back(trap, std::move(plan), options.correlation);
    }
    return run_trap_versions_shot(versions, rng);
}

}  // namespace

NoiseSpec protocol_noise_spec(const RegimeConfig &regime, const ProtocolOptions &options) {
    NoiseSpec spec;
    spec.regime = regime;
    spec.locality = options.locality;
    spec.spam = options.spam;
    spec.boundary = options.boundary;
    return spec;
}

uint64_t count_failed_traps(const LogicalCircuit &target, const NoiseSpec &spec, uint64_t m,
                            TrapConstruction construction, uint64_t seed, const ProtocolOptions &options) {
    uint64_t chunks = (m + kChunk - 1) / kChunk;
    std::vector<uint64_t> failures(chunks, 0);
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        for (uint64_t c = next++; c < chunks; c = next++) {
            uint64_t end = std::min(m, (c + 1) * kChunk);
            for (uint64_t k = c * kChunk; k < end; k++) {
                failures[c] += run_one_trap(target, spec, construction, derive_seed(seed, k), options);
            }
        }
    };
    size_t threads = std::max<size_t>(1, std::min<size_t>(options.threads, chunks));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    uint64_t total = 0;
    for (uint64_t f : failures) total += f;
    return total;
}

AccreditationResult run_protocol(const LogicalCircuit &target, const RegimeConfig &regime, uint64_t m,
                                 const SoundnessParams &soundness, TrapConstruction construction, Rng &rng,
                                 const ProtocolOptions &options) {
    if (m == 0) throw ConfigError("run_protocol: m must be at least 1");
    if (soundness.lemma == SoundnessLemma::Lemma4 && construction != TrapConstruction::Modified) {
        throw ConfigError("lemma4 soundness requires the modified trap construction");
    }
    regime.validate();
    validate_target_structure(target);
    NoiseSpec spec = protocol_noise_spec(regime, options);

    AccreditationResult r;
    r.seed = rng();
    r.m = m;
    r.n = target.n;
    r.regime = regime;
    r.construction = construction;
    r.alpha = options.alpha;
    r.beta = soundness.beta;
    r.target_position = rng.below(m + 1);

    if (target.n <= kMaxDenseQubits) {
        LogicalCircuit exec = options.purified ? purify_target(target) : target;
        NoisePlan plan = build_noise_plan(exec, spec);
        std::vector<double> dist = exact_output_distribution(exec, &plan);
        Rng target_rng(derive_seed(r.seed, m));
        double u = target_rng.uniform(), acc = 0;
        size_t outcome = dist.size() - 1;
        for (size_t i = 0; i < dist.size(); i++) {
            acc += dist[i];
            if (u < acc) {
                outcome = i;
                break;
            }
        }
        std::vector<uint8_t> bits(target.n);
        for (size_t q = 0; q < target.n; q++) bits[q] = (outcome >> q) & 1;
        r.target_output = std::move(bits);
    }

    r.n_inc = count_failed_traps(target, spec, m, construction, r.seed, options);
    r.p_inc = (double)r.n_inc / (double)m;
    r.gamma = gamma_from_counts(r.n_inc, m, r.beta);
    r.epsilon = achieved_epsilon(m, r.alpha);
    EntropyBound eb = entropy_density_bound(r.gamma, target.n);
    r.entropy_bound = eb.value;
    r.entropy_saturated = eb.saturated;
    r.infidelity_bound = infidelity_bound(r.gamma);
    r.mitigation_ok = mitigation_efficiency_check(r.gamma);
    return r;
}

ordered_json AccreditationResult::to_json() const {
    ordered_json j;
    j["m"] = m;
    j["n_inc"] = n_inc;
    j["p_inc"] = p_inc;
    j["beta"] = beta;
    j["gamma"] = gamma;
    j["epsilon"] = epsilon;
    j["alpha"] = alpha;
    j["entropy_bound"] = entropy_bound;
    j["entropy_saturated"] = entropy_saturated;
    j["infidelity_bound"] = infidelity_bound;
    j["mitigation_ok"] = mitigation_ok;
    j["seed"] = seed;
    ordered_json reg;
    reg["regime"] = to_string(regime.regime);
    reg["p_phys"] = regime.p_phys;
    reg["distance"] = regime.distance;
    reg["t_gate_error"] = regime.t_gate_error ? ordered_json(*regime.t_gate_error) : ordered_json(nullptr);
    reg["clifford_rate"] = regime.clifford_rate();
    reg["magic_rate"] = regime.magic_rate();
    j["regime"] = reg;
    j["n"] = n;
    j["construction"] = to_string(construction);
    j["target_position"] = target_position;
    j["target_output"] = target_output ? ordered_json(*target_output) : ordered_json(nullptr);
    return j;
}

}  // namespace lacc
