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

#include "gfdmlab/rng.hpp"

#include <cmath>

namespace gfdm {

namespace {

// splitmix64 step; the de-facto standard 64-bit seed scrambler.
uint64_t splitmix64(uint64_t &state)
{
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

uint64_t derive_stream_seed(uint64_t seed, std::initializer_list<uint64_t> key)
{
    uint64_t state = seed;
    uint64_t mixed = splitmix64(state);
    for (uint64_t k : key) {
        state = mixed ^ (k * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL);
        mixed = splitmix64(state);
    }
    return mixed;
}

RngStream::RngStream(uint64_t seed, std::initializer_list<uint64_t> key)
{
    uint64_t state = derive_stream_seed(seed, key);
    // Spread the derived seed over the full mt19937_64 state.
    std::seed_seq seq{splitmix64(state), splitmix64(state), splitmix64(state), splitmix64(state)};
    engine_.seed(seq);
}

uint64_t RngStream::bits()
{
    return engine_();
}

double RngStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) // log(0) guard; probability 2^-53 per draw
        u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::complex<double> RngStream::cnormal(double variance)
{
    double s = std::sqrt(variance / 2.0);
    return {s * normal(), s * normal()};
}

} // namespace gfdm
