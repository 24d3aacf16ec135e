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

#ifndef LACC_FRAME_SIMULATOR_TRAP_SHOT_H
#define LACC_FRAME_SIMULATOR_TRAP_SHOT_H

#include <memory>
#include <vector>

#include "lacc/frame_simulator/frame_program.h"
#include "lacc/trap_compiler/trap.h"

namespace lacc {

struct ShotOutcome {
    /// Output after the measurement-twirl unflip.
    std::vector<uint8_t> bitstring;
    bool failed = false;
};

/// A trap bound to its noise plan, ready for repeated shots.
class CompiledTrap {
   public:
    CompiledTrap(const TrapInstance &trap, const NoiseSpec &spec, Correlation correlation = {});
    /// Uses a prepared plan, for example one with altered channels.
    CompiledTrap(const TrapInstance &trap, NoisePlan plan, Correlation correlation = {});

    const FrameProgram &program() const {
        return program_;
    }
    const NoisePlan &plan() const {
        return *plan_;
    }
    const NoiseSampler &sampler() const {
        return *sampler_;
    }

   private:
    std::unique_ptr<NoisePlan> plan_;
    FrameProgram program_;
    std::unique_ptr<NoiseSampler> sampler_;
};

ShotOutcome run_trap_shot(const CompiledTrap &trap, Rng &rng);

/// One shot per version; the trap fails when any version fails.
bool run_trap_versions_shot(const std::vector<CompiledTrap> &versions, Rng &rng);

}  // namespace lacc

#endif
