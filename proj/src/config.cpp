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

#include "gfdmlab/config.hpp"

#include <stdexcept>
#include <string>

namespace gfdm {

int GfdmConfig::bits_per_symbol() const
{
    switch (mod_order) {
    case 4:
        return 2;
    case 16:
        return 4;
    case 64:
        return 6;
    default:
        throw std::invalid_argument("mod_order must be 4, 16 or 64, got " + std::to_string(mod_order));
    }
}

void GfdmConfig::validate() const
{
    if (n_subcarriers < 1)
        throw std::invalid_argument("n_subcarriers must be >= 1");
    if (n_timeslots < 1)
        throw std::invalid_argument("n_timeslots must be >= 1");
    if (cp_length < 0)
        throw std::invalid_argument("cp_length must be >= 0");
    if (cp_length > frame_size())
        throw std::invalid_argument("cp_length must not exceed the block length " +
                                    std::to_string(frame_size()));
    if (!(rolloff >= 0.0 && rolloff <= 1.0))
        throw std::invalid_argument("rolloff must lie in [0, 1]");
    if (mod_order != 4 && mod_order != 16 && mod_order != 64)
        throw std::invalid_argument("mod_order must be 4, 16 or 64");
    if (spreading_factor < 1)
        throw std::invalid_argument("spreading_factor must be >= 1");
    if (n_subcarriers % spreading_factor != 0)
        throw std::invalid_argument("spreading_factor must divide n_subcarriers");
    if (!(symbol_power > 0.0))
        throw std::invalid_argument("symbol_power must be positive");
}

} // namespace gfdm
