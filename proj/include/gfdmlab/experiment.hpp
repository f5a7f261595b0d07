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

#include "gfdmlab/config.hpp"
#include "gfdmlab/metrics.hpp"

namespace gfdm {

// One experiment = one flat key/value file.  Defaults are sized so that the
// full BER sweep finishes on a laptop; see the README for the broadcast-scale
// configuration.
struct ExperimentConfig {
    GfdmConfig waveform{.n_subcarriers = 16,
                        .n_timeslots = 5,
                        .cp_length = 16,
                        .rolloff = 0.5,
                        .mod_order = 16,
                        .spreading_factor = 4,
                        .symbol_power = 1.0};
    ChannelSetting channel;
    std::vector<Scheme> schemes = all_schemes();
    std::vector<double> ebn0_db = {0, 2, 4, 6, 8, 10, 12, 14, 16};
    int n_channels = 200;
    int n_blocks = 1;
    int dsic_passes = 4;
    long papr_blocks = 100000;
    int spread_symbol = 0;
    uint64_t seed = 1;
    int workers = 1;

    bool operator==(const ExperimentConfig &) const = default;
};

// Parses "key = value" lines; '#' starts a comment, blank lines are skipped.
// Unknown or repeated keys are hard errors.
ExperimentConfig parse_experiment_config(const std::string &text);

ExperimentConfig load_experiment_config(const std::string &path);

// Emits every key in a fixed order such that parse(render(c)) == c.
std::string render_experiment_config(const ExperimentConfig &cfg);

// CSV emitters.  Column order is part of the interface; values are printed
// with enough digits to round-trip.
std::string ber_csv(const std::vector<BerCurve> &curves);
std::string papr_csv(const std::vector<PaprCcdf> &curves);
std::string sinr_csv(const std::vector<std::pair<std::string, Eigen::VectorXd>> &profiles,
                     double ebn0_db);
std::string spread_csv(const std::vector<std::pair<std::string, Eigen::VectorXd>> &spectra);
std::string complexity_csv(const std::vector<ComplexityReport> &reports, int n_subcarriers,
                           int n_timeslots);

void write_text_file(const std::string &path, const std::string &content);

} // namespace gfdm
