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

#include <stdexcept>

#include <Eigen/Dense>

#include "gfdmlab/config.hpp"
#include "gfdmlab/rng.hpp"

namespace gfdm {

// Multipath channel over one block. The cyclic prefix turns the linear tap
// convolution into a circular one, so the block sees the MN x MN circulant
// matrix H whose first column is the zero-padded tap vector. freq_response
// holds the unnormalized MN-point DFT of the taps: H = W diag(psi) W^H with W
// the unitary IDFT matrix.
class ChannelRealization {
  public:
    ChannelRealization(Eigen::VectorXcd taps, int frame_size);

    const Eigen::VectorXcd &taps() const { return taps_; }
    int length() const { return static_cast<int>(taps_.size()); }
    int frame_size() const { return frame_size_; }
    const Eigen::VectorXcd &freq_response() const { return freq_; }

    // Built on first use; do not share one realization across threads.
    const Eigen::MatrixXcd &circulant() const;

  private:
    Eigen::VectorXcd taps_;
    int frame_size_;
    Eigen::VectorXcd freq_;
    mutable Eigen::MatrixXcd circulant_;
};

ChannelRealization identity_channel(int frame_size);

struct NoiseModel {
    double variance = 0.0; // per complex sample
};

// Exponential power-delay profile: raw tap power 10^(-a/divisor) for tap a,
// optionally normalized to unit total power.
Eigen::VectorXd exponential_pdp(int n_taps, double divisor = 5.0, bool normalized = true);

// Rayleigh taps: h_a = sqrt(p_a/2) (g1 + j g2) with independent standard normals.
ChannelRealization sample_channel(int n_taps, const Eigen::VectorXd &pdp, RngStream &rng,
                                  int frame_size);

// Linear convolution of the prefixed block with the taps plus AWGN. The model
// requires cp_length >= channel length; shorter prefixes are a hard error.
Eigen::VectorXcd transmit(const Eigen::VectorXcd &x_cp, const ChannelRealization &ch,
                          const NoiseModel &noise, RngStream &rng, int cp_length);

class SpectralNullError : public std::runtime_error {
  public:
    SpectralNullError(int bin, double magnitude, double largest);
    int bin() const { return bin_; }

  private:
    int bin_;
};

// One-tap frequency-domain equalization y_fde = W diag(1/psi) W^H y.
// A bin with |psi| below 1e-12 of the largest raises SpectralNullError.
Eigen::VectorXcd fde_equalize(const Eigen::VectorXcd &y, const ChannelRealization &ch);

// Dense reference path through the materialized DFT matrices.
Eigen::VectorXcd fde_equalize_dense(const Eigen::VectorXcd &y, const ChannelRealization &ch);

// sigma_nu^2 = sigma_d^2 / (log2(mod_order) 10^(ebn0/10)), times
// (MN + N_cp)/MN when the prefix overhead is charged to Eb.
double ebn0_to_noise_variance(const GfdmConfig &cfg, double ebn0_db, bool with_cp_loss);

} // namespace gfdm
