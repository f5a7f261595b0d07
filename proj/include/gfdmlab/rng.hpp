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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace gfdm {

// Counter-based stream derivation. A master seed plus a key tuple (purpose tag,
// trial index, ...) deterministically selects an independent substream, so a
// Monte Carlo trial draws the same numbers no matter which worker runs it or
// in which order trials complete.
uint64_t derive_stream_seed(uint64_t seed, std::initializer_list<uint64_t> key);

class RngStream {
  public:
    RngStream(uint64_t seed, std::initializer_list<uint64_t> key);

    uint64_t bits();

    // Uniform on [0, 1) with 53 random mantissa bits.
    double uniform();

    // Standard normal via Box-Muller; pairs are cached.
    double normal();

    // Circularly symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> cnormal(double variance);

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace gfdm
