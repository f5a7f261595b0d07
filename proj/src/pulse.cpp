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

#include "gfdmlab/pulse.hpp"

#include <cmath>
#include <stdexcept>

#include "gfdmlab/fft.hpp"

namespace gfdm {

namespace {

// Raised-cosine spectrum sampled at integer bin distance x from DC.
// Passband half-width (1-rof)*M/2, transition ends at (1+rof)*M/2.
double raised_cosine_bin(double x, double rolloff, int m_bins)
{
    double lo = (1.0 - rolloff) * m_bins / 2.0;
    double hi = (1.0 + rolloff) * m_bins / 2.0;
    if (x < lo)
        return 1.0;
    if (x > hi)
        return 0.0;
    if (rolloff == 0.0)
        return 0.5; // collapsed transition: the half-amplitude edge bin
    return 0.5 * (1.0 + std::cos(M_PI * (x - lo) / (rolloff * m_bins)));
}

} // namespace

PulseShape make_rrc_pulse(const GfdmConfig &cfg)
{
    if (!(cfg.rolloff >= 0.0 && cfg.rolloff <= 1.0))
        throw std::invalid_argument("rolloff must lie in [0, 1]");
    const int mn = cfg.frame_size();
    if (mn < 1)
        throw std::invalid_argument("frame size must be positive");

    Eigen::VectorXcd spectrum(mn);
    for (int f = 0; f < mn; f++) {
        double x = std::min(f, mn - f); // circular distance from DC
        spectrum(f) = std::sqrt(raised_cosine_bin(x, cfg.rolloff, cfg.n_timeslots));
    }

    // Spectrum is real and even in the circular sense, so the IDFT is real.
    Eigen::VectorXcd time = fft::inverse(spectrum);
    Eigen::VectorXd taps = time.real();
    taps /= taps.norm();

    return PulseShape{std::move(taps), cfg.rolloff};
}

} // namespace gfdm
