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

#include <cmath>
#include <complex>

#include "gfdmlab/channel.hpp"
#include "gfdmlab/modulation.hpp"
#include "gfdmlab/rng.hpp"

using namespace gfdm;

namespace {

Eigen::VectorXcd random_vector(int n, uint64_t seed)
{
    RngStream rng(seed, {6});
    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; i++)
        x(i) = rng.cnormal(1.0);
    return x;
}

// Oracle: y(i) = sum_a h(a) x((i - a) mod n).
Eigen::VectorXcd circular_convolve(const Eigen::VectorXcd &taps, const Eigen::VectorXcd &x)
{
    const int n = static_cast<int>(x.size());
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
    for (int i = 0; i < n; i++)
        for (int a = 0; a < taps.size(); a++)
            y(i) += taps(a) * x(((i - a) % n + n) % n);
    return y;
}

} // namespace

TEST_CASE("exponential power profile follows the decay law")
{
    const Eigen::VectorXd raw = exponential_pdp(6, 5.0, false);
    CHECK(raw(0) == doctest::Approx(1.0));
    for (int a = 1; a < 6; a++)
        CHECK(raw(a) / raw(a - 1) == doctest::Approx(std::pow(10.0, -0.2)).epsilon(1e-12));
    const Eigen::VectorXd unit = exponential_pdp(6, 5.0);
    CHECK(unit.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((unit / unit(0) - raw).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("sampled taps reproduce the profile on average")
{
    const Eigen::VectorXd pdp = exponential_pdp(4, 5.0);
    RngStream rng(1, {3});
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(4);
    const int trials = 20000;
    for (int t = 0; t < trials; t++) {
        const ChannelRealization ch = sample_channel(4, pdp, rng, 16);
        for (int a = 0; a < 4; a++)
            acc(a) += std::norm(ch.taps()(a));
    }
    for (int a = 0; a < 4; a++)
        CHECK(acc(a) / trials == doctest::Approx(pdp(a)).epsilon(0.05));
}

TEST_CASE("frequency response is the transform of the padded taps")
{
    const Eigen::VectorXd pdp = exponential_pdp(3, 5.0);
    RngStream rng(2, {3});
    const ChannelRealization ch = sample_channel(3, pdp, rng, 12);
    const Eigen::VectorXcd psi = ch.freq_response();
    REQUIRE(psi.size() == 12);
    for (int f = 0; f < 12; f++) {
        std::complex<double> want = 0.0;
        for (int a = 0; a < 3; a++)
            want += ch.taps()(a) * std::polar(1.0, -2.0 * M_PI * f * a / 12.0);
        CHECK(std::abs(psi(f) - want) <= 1e-12);
    }
}

TEST_CASE("circulant operator performs circular convolution")
{
    const Eigen::VectorXd pdp = exponential_pdp(4, 5.0);
    RngStream rng(3, {3});
    const ChannelRealization ch = sample_channel(4, pdp, rng, 10);
    const Eigen::VectorXcd x = random_vector(10, 19);
    const Eigen::VectorXcd got = ch.circulant() * x;
    const Eigen::VectorXcd want = circular_convolve(ch.taps(), x);
    CHECK((got - want).norm() <= 1e-12 * want.norm());
}

TEST_CASE("identity channel is transparent")
{
    const ChannelRealization ch = identity_channel(8);
    CHECK(ch.length() == 1);
    const Eigen::VectorXcd x = random_vector(8, 23);
    CHECK((ch.circulant() * x - x).norm() <= 1e-15);
    CHECK((ch.freq_response() - Eigen::VectorXcd::Ones(8)).norm() <= 1e-15);
}

TEST_CASE("noiseless transmission is linear convolution")
{
    const Eigen::VectorXd pdp = exponential_pdp(3, 5.0);
    RngStream rng(4, {3});
    const ChannelRealization ch = sample_channel(3, pdp, rng, 8);
    const Eigen::VectorXcd x_cp = random_vector(11, 29); // frame 8 plus prefix 3
    RngStream quiet(4, {4});
    const Eigen::VectorXcd y = transmit(x_cp, ch, NoiseModel{0.0}, quiet, 3);
    REQUIRE(y.size() == 13);
    for (int i = 0; i < 13; i++) {
        std::complex<double> want = 0.0;
        for (int a = 0; a < 3; a++)
            if (i - a >= 0 && i - a < 11)
                want += ch.taps()(a) * x_cp(i - a);
        CHECK(std::abs(y(i) - want) <= 1e-12);
    }
}

TEST_CASE("prefix turns the dispersive channel circular")
{
    const Eigen::VectorXd pdp = exponential_pdp(4, 5.0);
    RngStream rng(5, {3});
    const ChannelRealization ch = sample_channel(4, pdp, rng, 12);
    const Eigen::VectorXcd x = random_vector(12, 31);
    RngStream quiet(5, {4});
    const Eigen::VectorXcd rec = transmit(add_cp(x, 4), ch, NoiseModel{0.0}, quiet, 4);
    const Eigen::VectorXcd y = remove_cp(rec, 4, 4);
    CHECK((y - circular_convolve(ch.taps(), x)).norm() <= 1e-12);
}

TEST_CASE("transmission rejects a prefix shorter than the channel")
{
    const Eigen::VectorXd pdp = exponential_pdp(5, 5.0);
    RngStream rng(6, {3});
    const ChannelRealization ch = sample_channel(5, pdp, rng, 12);
    RngStream quiet(6, {4});
    CHECK_THROWS_AS(transmit(random_vector(15, 37), ch, NoiseModel{0.0}, quiet, 3),
                    std::invalid_argument);
}

TEST_CASE("frequency-domain equalizer inverts the channel")
{
    const Eigen::VectorXd pdp = exponential_pdp(4, 5.0);
    RngStream rng(7, {3});
    const ChannelRealization ch = sample_channel(4, pdp, rng, 16);
    const Eigen::VectorXcd x = random_vector(16, 41);
    const Eigen::VectorXcd y = ch.circulant() * x;
    CHECK((fde_equalize(y, ch) - x).norm() <= 1e-9 * x.norm());
    CHECK((fde_equalize_dense(y, ch) - x).norm() <= 1e-9 * x.norm());
    CHECK((fde_equalize(y, ch) - fde_equalize_dense(y, ch)).norm() <= 1e-10);
}

TEST_CASE("spectral nulls are rejected with the offending bin")
{
    Eigen::VectorXcd taps(2);
    taps << 1.0, -1.0;
    const ChannelRealization ch(taps, 8);
    const Eigen::VectorXcd y = random_vector(8, 43);
    try {
        (void)fde_equalize(y, ch);
        FAIL("expected SpectralNullError");
    } catch (const SpectralNullError &e) {
        CHECK(e.bin() == 0);
    }
}

TEST_CASE("noise variance follows the energy budget")
{
    GfdmConfig cfg;
    cfg.n_subcarriers = 16;
    cfg.n_timeslots = 5;
    cfg.cp_length = 16;
    cfg.mod_order = 4;
    cfg.symbol_power = 1.0;

    // At 0 dB, the variance equals symbol power over bits per symbol, times
    // the prefix energy penalty when requested.
    const double plain = ebn0_to_noise_variance(cfg, 0.0, false);
    CHECK(plain == doctest::Approx(1.0 / 2.0).epsilon(1e-12));
    const double with_cp = ebn0_to_noise_variance(cfg, 0.0, true);
    CHECK(with_cp == doctest::Approx((1.0 / 2.0) * (80.0 + 16.0) / 80.0).epsilon(1e-12));

    // 10 dB lowers the variance by a factor of ten.
    CHECK(ebn0_to_noise_variance(cfg, 10.0, false) ==
          doctest::Approx(plain / 10.0).epsilon(1e-12));

    // Scaling the constellation power scales the variance.
    cfg.symbol_power = 4.0;
    CHECK(ebn0_to_noise_variance(cfg, 0.0, false) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("transmission adds noise of the requested variance")
{
    const ChannelRealization ch = identity_channel(64);
    const Eigen::VectorXcd x = Eigen::VectorXcd::Zero(65);
    RngStream rng(8, {5});
    double acc = 0.0;
    const int trials = 400;
    for (int t = 0; t < trials; t++) {
        const Eigen::VectorXcd y = transmit(x, ch, NoiseModel{0.09}, rng, 1);
        acc += y.squaredNorm() / static_cast<double>(y.size());
    }
    CHECK(acc / trials == doctest::Approx(0.09).epsilon(0.05));
}
