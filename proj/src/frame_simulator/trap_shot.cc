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

#include "lacc/frame_simulator/trap_shot.h"

#include <utility>

namespace lacc {

CompiledTrap::CompiledTrap(const TrapInstance &trap, const NoiseSpec &spec, Correlation correlation)
    : plan_(std::make_unique<NoisePlan>(build_noise_plan(trap.circuit, spec))),
      program_(FrameProgram::compile(trap.circuit, *plan_)),
      sampler_(std::make_unique<NoiseSampler>(*plan_, correlation)) {
}

CompiledTrap::CompiledTrap(const TrapInstance &trap, NoisePlan plan, Correlation correlation)
    : plan_(std::make_unique<NoisePlan>(std::move(plan))),
      program_(FrameProgram::compile(trap.circuit, *plan_)),
      sampler_(std::make_unique<NoiseSampler>(*plan_, correlation)) {
}

ShotOutcome run_trap_shot(const CompiledTrap &trap, Rng &rng) {
    std::vector<NoiseHit> hits;
    trap.sampler().sample(rng, hits);
    ShotOutcome out;
    out.failed = trap.program().run(hits, &out.bitstring);
    return out;
}

bool run_trap_versions_shot(const std::vector<CompiledTrap> &versions, Rng &rng) {
    thread_local std::vector<NoiseHit> hits;
    bool failed = false;
    for (const CompiledTrap &v : versions) {
        v.sampler().sample(rng, hits);
        failed |= v.program().run(hits);
    }
    return failed;
}

}  // namespace lacc
