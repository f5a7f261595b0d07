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

#include <Eigen/Dense>

#include "gfdmlab/config.hpp"

namespace gfdm {

// Prototype transmit pulse, treated as periodic with period MN.
struct PulseShape {
    Eigen::VectorXd taps; // g(0..MN-1), unit energy
    double rolloff = 0.0;
};

// Root-raised-cosine pulse built in the frequency domain on the MN-point grid.
// The raised-cosine root is centered at DC with one subcarrier spacing
// (M grid bins) of bandwidth, so neighboring subcarriers overlap only through
// the roll-off skirts. Circularly symmetric, real, normalized to unit energy.
PulseShape make_rrc_pulse(const GfdmConfig &cfg);

} // namespace gfdm
