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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfdmlab/config.hpp"

using namespace gfdm;

TEST_CASE("defaults describe a valid waveform")
{
    GfdmConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.frame_size() == cfg.n_subcarriers * cfg.n_timeslots);
    CHECK(cfg.bits_per_symbol() == 4);
    CHECK(cfg.bits_per_block() == cfg.frame_size() * 4);
}

TEST_CASE("modulation order must be square QAM")
{
    GfdmConfig cfg;
    for (int order : {4, 16, 64}) {
        cfg.mod_order = order;
        CHECK_NOTHROW(cfg.validate());
    }
    for (int order : {2, 3, 8, 32, 100, 256}) {
        cfg.mod_order = order;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
}

TEST_CASE("geometry bounds are enforced")
{
    GfdmConfig cfg;
    cfg.n_subcarriers = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = GfdmConfig{};
    cfg.n_timeslots = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = GfdmConfig{};
    cfg.cp_length = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("rolloff is confined to the unit interval")
{
    GfdmConfig cfg;
    cfg.rolloff = -0.1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.rolloff = 1.1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.rolloff = 0.0;
    CHECK_NOTHROW(cfg.validate());
    cfg.rolloff = 1.0;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("spreading factor must divide the subcarrier count")
{
    GfdmConfig cfg;
    cfg.n_subcarriers = 12;
    cfg.spreading_factor = 5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.spreading_factor = 4;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("symbol power must be positive")
{
    GfdmConfig cfg;
    cfg.symbol_power = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.symbol_power = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
