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

#include <set>
#include <string>

#include "gfdmlab/validate.hpp"

using namespace gfdm;

TEST_CASE("default configuration passes every structural check")
{
    const std::vector<CheckResult> results = run_validation(ExperimentConfig{}, 1);
    CHECK(results.size() >= 15);
    for (const CheckResult &r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.passed);
    }
    CHECK(all_passed(results));

    std::set<std::string> names;
    for (const CheckResult &r : results)
        names.insert(r.name);
    CHECK(names.size() == results.size()); // no duplicate check names
    CHECK(names.count("noiseless-reconstruction") == 1);
    CHECK(names.count("bccb-detects-perturbation") == 1);
    CHECK(names.count("cp-covers-channel") == 1);
}

TEST_CASE("results are reproducible for a fixed seed")
{
    const auto a = run_validation(ExperimentConfig{}, 7);
    const auto b = run_validation(ExperimentConfig{}, 7);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].passed == b[i].passed);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("a prefix shorter than the channel is reported by name")
{
    ExperimentConfig cfg;
    cfg.waveform.cp_length = 8;
    cfg.channel.n_taps = 16;
    const std::vector<CheckResult> results = run_validation(cfg, 1);
    CHECK_FALSE(all_passed(results));
    bool found = false;
    for (const CheckResult &r : results)
        if (r.name == "cp-covers-channel") {
            found = true;
            CHECK_FALSE(r.passed);
        } else {
            // The geometry checks run at a clamped scale and stay green.
            CHECK(r.passed);
        }
    CHECK(found);
}

TEST_CASE("flat-channel configurations skip no checks")
{
    ExperimentConfig cfg;
    cfg.channel.kind = ChannelSetting::Kind::awgn;
    const auto fading = run_validation(ExperimentConfig{}, 1);
    const auto flat = run_validation(cfg, 1);
    CHECK(flat.size() == fading.size());
    CHECK(all_passed(flat));
}
