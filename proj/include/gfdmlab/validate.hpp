// SPDX-License-Identifier: Apache-2.0
//
// gfdmlab: waveform laboratory for generalized frequency division multiplexing
// Copyright (C) 2026 the gfdmlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfdmlab/experiment.hpp"

namespace gfdm {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // measured deviation or the reason for failure
};

// Self-checks of the structural identities the whole pipeline rests on,
// run at a desk-top scale derived from the configuration (subcarriers and
// time slots are clamped, everything else is taken as given, in particular
// the prefix-versus-channel-length relation).  Includes one negative
// control: a perturbed matrix must make the structure detector fail.
std::vector<CheckResult> run_validation(const ExperimentConfig &cfg, uint64_t seed);

bool all_passed(const std::vector<CheckResult> &results);

} // namespace gfdm
