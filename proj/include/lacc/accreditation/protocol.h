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

#ifndef LACC_ACCREDITATION_PROTOCOL_H
#define LACC_ACCREDITATION_PROTOCOL_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lacc/accreditation/bounds.h"
#include "lacc/circuit_ir/circuit.h"
#include "lacc/noise_models/noise_plan.h"
#include "lacc/noise_models/sampler.h"
#include "lacc/trap_compiler/trap.h"
#include "lacc/util/rng.h"

namespace lacc {

/// Invalid combination of protocol settings.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Replaces the channel at one noise location of every trap circuit.
struct ChannelOverride {
    size_t location = 0;
    PauliChannel channel;
};

struct ProtocolOptions {
    double alpha = 0.95;
    bool purified = false;
    /// Inserts a fresh Pauli twirl into every trap circuit.
    bool twirl = true;
    size_t threads = 1;
    NoiseLocality locality = NoiseLocality::PerGate;
    bool spam = true;
    bool boundary = true;
    Correlation correlation;
    TrapOptions trap;
    std::vector<ChannelOverride> overrides;
};

struct AccreditationResult {
    uint64_t m = 0;
    uint64_t n_inc = 0;
    double p_inc = 0;
    double beta = 0;
    double gamma = 0;
    double epsilon = 0;
    double alpha = 0;
    double entropy_bound = 0;
    bool entropy_saturated = false;
    double infidelity_bound = 0;
    bool mitigation_ok = true;
    uint64_t seed = 0;
    RegimeConfig regime;
    size_t n = 0;
    TrapConstruction construction = TrapConstruction::Standard;
    /// Index of the target among the m + 1 interleaved circuits.
    uint64_t target_position = 0;
    /// Sampled target output, present when the target fits the dense simulator.
    std::optional<std::vector<uint8_t>> target_output;

    ordered_json to_json() const;
};

NoiseSpec protocol_noise_spec(const RegimeConfig &regime, const ProtocolOptions &options);

/// Compiles m traps, runs one shot of each (both versions for standard pairs)
/// together with the target in a random interleaving, and derives the bounds.
/// Throws ConfigError when Lemma4 soundness is paired with standard traps.
AccreditationResult run_protocol(const LogicalCircuit &target, const RegimeConfig &regime, uint64_t m,
                                 const SoundnessParams &soundness, TrapConstruction construction, Rng &rng,
                                 const ProtocolOptions &options = {});

/// Failure count of the m traps of one run seeded by `seed`. Trap k uses the
/// stream derive_seed(seed, k), so the count does not depend on thread count.
uint64_t count_failed_traps(const LogicalCircuit &target, const NoiseSpec &spec, uint64_t m,
                            TrapConstruction construction, uint64_t seed, const ProtocolOptions &options);

}  // namespace lacc

#endif
