// SPDX-License-Identifier: Apache-2.0
//
// gfdmlab: waveform laboratory for generalized frequency division multiplexing
// Copyright (C) 2026 the gfdmlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

namespace gfdm {

// One GFDM block carries n_subcarriers x n_timeslots = MN data symbols.
struct GfdmConfig {
    int n_subcarriers = 128;   // N
    int n_timeslots = 5;       // M
    int cp_length = 16;        // cyclic prefix samples, <= MN
    double rolloff = 0.5;      // RRC roll-off in [0, 1]
    int mod_order = 16;        // square QAM order: 4, 16 or 64
    int spreading_factor = 1;  // Q, divides N; sets N_dft = N/Q for DFT spreading
    double symbol_power = 1.0; // average data symbol power

    int frame_size() const { return n_subcarriers * n_timeslots; }
    int bits_per_symbol() const;
    int bits_per_block() const { return frame_size() * bits_per_symbol(); }

    // Throws std::invalid_argument naming the first violated rule.
    void validate() const;

    bool operator==(const GfdmConfig &) const = default;
};

} // namespace gfdm
