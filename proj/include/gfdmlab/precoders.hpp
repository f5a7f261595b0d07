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

#include <vector>

#include <Eigen/Dense>

#include "gfdmlab/bccb.hpp"
#include "gfdmlab/channel.hpp"
#include "gfdmlab/modulation.hpp"
#include "gfdmlab/receivers.hpp"

namespace gfdm {

enum class PrecoderKind { identity, bidft_n, bidft_m, dft_lfdma, dft_ifdma, svd };

const char *to_string(PrecoderKind kind);

// All precoders are square and unitary: the symbol rate is unchanged, only the
// mixing across the MN symbol slots differs.
struct PrecoderSpec {
    PrecoderKind kind = PrecoderKind::identity;
    Eigen::MatrixXcd matrix;
    int spreading_factor = 1; // Q, DFT kinds only
    int n_dft = 0;            // N/Q, DFT kinds only
};

struct SvdFactors {
    Eigen::MatrixXcd u;
    Eigen::MatrixXcd v;
    Eigen::VectorXd singular_values; // descending
};

// Factorizes the effective channel HA = U S V^H through the Gram eigensystem.
SvdFactors svd_factorize(const Eigen::MatrixXcd &ha);

// SVD kind requires factors (transmitter-side channel knowledge).
PrecoderSpec make_precoder(PrecoderKind kind, const GfdmConfig &cfg,
                           const SvdFactors *factors = nullptr);

Eigen::VectorXcd apply_precoder(const PrecoderSpec &p, const Eigen::VectorXcd &d);

// FFT route for the structured kinds (dense fallback for SVD); equals
// apply_precoder to rounding.
Eigen::VectorXcd apply_precoder_fast(const PrecoderSpec &p, const GfdmConfig &cfg,
                                     const Eigen::VectorXcd &d);

struct PrecodedEstimate {
    Eigen::VectorXcd symbols;
    SinrReport snr;
};

// ----- block-IDFT precoding, joint processing ----------------------------
// Receive chain (HA F)^H then blockwise inverse of D = F^H (HA)^H (HA) F.
// Estimate is d plus noise with covariance noise_var * D^{-1}.

struct BidftJointEqualizer {
    Eigen::MatrixXcd w; // full receive matrix
    SinrReport snr;
};

BidftJointEqualizer make_bidft_joint_equalizer(const ChannelRealization &ch,
                                               const ModulationMatrix &a, double noise_var,
                                               double sym_power);

PrecodedEstimate bidft_joint_receive(const Eigen::VectorXcd &y, const ChannelRealization &ch,
                                     const ModulationMatrix &a, double noise_var, double sym_power);

// ----- block-IDFT precoding, two-stage processing -------------------------
// FDE first, then the channel-independent front W = D~^{-1} (A F)^H with
// D~ = F^H A^H A F. The matrix ordering of `a` selects the variant: n_ordered
// pairs with F built from M blocks of size N, m_ordered with N blocks of size M.

struct BidftTwoStage {
    Eigen::MatrixXcd front;    // D~^{-1} (A F)^H
    Eigen::MatrixXcd spread_t; // (A F) D~^{-H}, feeds the noise-power rows
};

BidftTwoStage make_bidft_two_stage(const ModulationMatrix &a);

SinrReport bidft_two_stage_snr(const BidftTwoStage &ts, const ChannelRealization &ch,
                               double noise_var, double sym_power);

PrecodedEstimate bidft_two_stage_receive(const Eigen::VectorXcd &y, const ChannelRealization &ch,
                                         const ModulationMatrix &a, double noise_var,
                                         double sym_power);

// ----- DFT spreading (LFDMA / IFDMA) --------------------------------------

struct DftEqualizer {
    Eigen::MatrixXcd w; // P^H (HA)^{-1}
    SinrReport snr;
};

DftEqualizer make_dft_equalizer(const ChannelRealization &ch, const ModulationMatrix &a,
                                const PrecoderSpec &p, double noise_var, double sym_power);

PrecodedEstimate dft_precoded_receive(const Eigen::VectorXcd &y, const ChannelRealization &ch,
                                      const ModulationMatrix &a, const PrecoderSpec &p,
                                      double noise_var, double sym_power);

// ----- SVD precoding -------------------------------------------------------
// Returns U^H y untouched: component l is s_l d_l plus unit-variance-scaled
// noise. No matrix inversion anywhere on this path.

PrecodedEstimate svd_precode_receive(const Eigen::VectorXcd &y, const SvdFactors &factors,
                                     double noise_var, double sym_power);

double precoded_ber_average(const std::vector<SinrReport> &reports, int mod_order);

} // namespace gfdm
