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

#include "gfdmlab/channel.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "gfdmlab/fft.hpp"

namespace gfdm {

ChannelRealization::ChannelRealization(Eigen::VectorXcd taps, int frame_size)
    : taps_(std::move(taps)), frame_size_(frame_size)
{
    if (frame_size_ < 1)
        throw std::invalid_argument("frame_size must be positive");
    if (taps_.size() < 1 || taps_.size() > frame_size_)
        throw std::invalid_argument("channel length must lie in [1, frame_size]");
    Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(frame_size_);
    padded.head(taps_.size()) = taps_;
    freq_ = fft::forward(padded);
}

const Eigen::MatrixXcd &ChannelRealization::circulant() const
{
    if (circulant_.size() == 0) {
        circulant_ = Eigen::MatrixXcd::Zero(frame_size_, frame_size_);
        for (int col = 0; col < frame_size_; col++)
            for (int tap = 0; tap < taps_.size(); tap++)
                circulant_((col + tap) % frame_size_, col) = taps_(tap);
    }
    return circulant_;
}

ChannelRealization identity_channel(int frame_size)
{
    Eigen::VectorXcd taps(1);
    taps(0) = 1.0;
    return ChannelRealization(std::move(taps), frame_size);
}

Eigen::VectorXd exponential_pdp(int n_taps, double divisor, bool normalized)
{
    if (n_taps < 1)
        throw std::invalid_argument("n_taps must be >= 1");
    if (!(divisor > 0.0))
        throw std::invalid_argument("divisor must be positive");
    Eigen::VectorXd p(n_taps);
    for (int a = 0; a < n_taps; a++)
        p(a) = std::pow(10.0, -static_cast<double>(a) / divisor);
    if (normalized)
        p /= p.sum();
    return p;
}

ChannelRealization sample_channel(int n_taps, const Eigen::VectorXd &pdp, RngStream &rng,
                                  int frame_size)
{
    if (pdp.size() != n_taps)
        throw std::invalid_argument("pdp length must equal n_taps");
    Eigen::VectorXcd taps(n_taps);
    for (int a = 0; a < n_taps; a++)
        taps(a) = rng.cnormal(pdp(a));
    return ChannelRealization(std::move(taps), frame_size);
}

Eigen::VectorXcd transmit(const Eigen::VectorXcd &x_cp, const ChannelRealization &ch,
                          const NoiseModel &noise, RngStream &rng, int cp_length)
{
    const int len = ch.length();
    if (cp_length < len)
        throw std::invalid_argument("cyclic prefix (" + std::to_string(cp_length) +
                                    ") shorter than the channel (" + std::to_string(len) +
                                    "); the circular-convolution model does not hold");
    if (noise.variance < 0.0)
        throw std::invalid_argument("noise variance must be >= 0");

    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(x_cp.size() + len - 1);
    for (int tap = 0; tap < len; tap++)
        y.segment(tap, x_cp.size()) += ch.taps()(tap) * x_cp;
    if (noise.variance > 0.0)
        for (int i = 0; i < y.size(); i++)
            y(i) += rng.cnormal(noise.variance);
    return y;
}

namespace {

std::string spectral_null_message(int bin, double magnitude, double largest)
{
    char msg[160];
    std::snprintf(msg, sizeof(msg), "channel spectral null at bin %d: |psi| = %.3e vs largest %.3e",
                  bin, magnitude, largest);
    return msg;
}

} // namespace

SpectralNullError::SpectralNullError(int bin, double magnitude, double largest)
    : std::runtime_error(spectral_null_message(bin, magnitude, largest)), bin_(bin)
{
}

namespace {

void check_spectrum(const Eigen::VectorXcd &psi)
{
    double largest = psi.cwiseAbs().maxCoeff();
    for (int b = 0; b < psi.size(); b++) {
        double mag = std::abs(psi(b));
        if (mag < 1e-12 * largest || largest == 0.0)
            throw SpectralNullError(b, mag, largest);
    }
}

} // namespace

Eigen::VectorXcd fde_equalize(const Eigen::VectorXcd &y, const ChannelRealization &ch)
{
    if (y.size() != ch.frame_size())
        throw std::invalid_argument("record length must equal the frame size");
    const Eigen::VectorXcd &psi = ch.freq_response();
    check_spectrum(psi);
    Eigen::VectorXcd spec = fft::forward(y);
    spec.array() /= psi.array();
    return fft::inverse(spec) / static_cast<double>(y.size());
}

Eigen::VectorXcd fde_equalize_dense(const Eigen::VectorXcd &y, const ChannelRealization &ch)
{
    const int mn = ch.frame_size();
    if (y.size() != mn)
        throw std::invalid_argument("record length must equal the frame size");
    const Eigen::VectorXcd &psi = ch.freq_response();
    check_spectrum(psi);

    // W is the unitary IDFT matrix; y_fde = W diag(1/psi) W^H y.
    Eigen::MatrixXcd w(mn, mn);
    const double scale = 1.0 / std::sqrt(static_cast<double>(mn));
    for (int r = 0; r < mn; r++)
        for (int c = 0; c < mn; c++)
            w(r, c) = scale * std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) * c / mn);
    return w * psi.cwiseInverse().asDiagonal() * w.adjoint() * y;
}

double ebn0_to_noise_variance(const GfdmConfig &cfg, double ebn0_db, bool with_cp_loss)
{
    double bits = cfg.bits_per_symbol();
    double var = cfg.symbol_power / (bits * std::pow(10.0, ebn0_db / 10.0));
    if (with_cp_loss)
        var *= static_cast<double>(cfg.frame_size() + cfg.cp_length) / cfg.frame_size();
    return var;
}

} // namespace gfdm
