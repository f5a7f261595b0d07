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

#include "gfdmlab/channel.hpp"
#include "gfdmlab/modulation.hpp"
#include "gfdmlab/qam.hpp"

namespace gfdm {

// MMSE estimate decomposes as d_hat = B d + C v. Eigendecomposition of the
// Gram matrix (HA)^H (HA) = V diag(lambda) V^H drives both matrices:
//   B = V diag(lambda/(rho+lambda)) V^H,  C = V diag(1/(rho+lambda)) V^H (HA)^H
// with rho = noise_var / sym_power.
struct EqualizerMatrices {
    Eigen::MatrixXcd b;
    Eigen::MatrixXcd c;
    Eigen::VectorXd eigenvalues; // ascending
    Eigen::MatrixXcd eigenvectors;
};

EqualizerMatrices mmse_matrices(const Eigen::MatrixXcd &ha, double noise_var, double sym_power);

struct SinrReport {
    Eigen::VectorXd gamma;
    Eigen::VectorXd p_sig;
    Eigen::VectorXd p_inr;
    Eigen::VectorXd p_npp;
};

Eigen::VectorXcd mf_equalize(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &ha);
Eigen::VectorXcd zf_equalize(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &ha);
Eigen::VectorXcd mmse_equalize(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &ha,
                               double noise_var, double sym_power);

// Matched filter detection refined by iterative cancellation of the two
// neighboring subcarriers, `passes` sweeps with immediate hard-decision
// updates. passes = 0 reduces to plain matched filtering. Expects the channel
// already equalized away (y_fde).
Eigen::VectorXcd dsic_equalize(const Eigen::VectorXcd &y_fde, const ModulationMatrix &a, int passes,
                               const QamMapper &constellation);

// Same sweep on a precomputed matched-filter output and Gram matrix.
Eigen::VectorXcd dsic_refine(const Eigen::VectorXcd &z_mf, const Eigen::MatrixXcd &gram,
                             int n_subcarriers, int n_timeslots, Ordering ordering, int passes,
                             const QamMapper &constellation);

// Per-symbol MMSE SINR decomposition over a frequency-selective channel.
SinrReport mmse_sinr_fsfc(const ChannelRealization &ch, const Eigen::MatrixXcd &a, double noise_var,
                          double sym_power);
SinrReport mmse_sinr_fsfc(const Eigen::MatrixXcd &ha, double noise_var, double sym_power);

// AWGN collapses the report to one number: the Gram matrix of A is BCCB, its
// diagonal entries all agree, and the powers reduce to eigenvalue traces.
double mmse_sinr_awgn(const ModulationMatrix &a, double noise_var, double sym_power);

// Gray square-QAM bit error rate over AWGN at symbol SINR gamma.
double ber_qam_awgn(double gamma, int mod_order);

// Average of ber_qam_awgn over all symbols of all reports.
double ber_fsfc_average(const std::vector<SinrReport> &reports, int mod_order);

// Draws blocks through the MMSE chain and returns d_hat_l - B_ll d_l for
// every symbol, in block-major order (sample t belongs to symbol t % MN).
Eigen::VectorXcd interference_noise_samples(const ChannelRealization &ch, const Eigen::MatrixXcd &a,
                                            double noise_var, const QamMapper &constellation,
                                            RngStream &rng, int count);

} // namespace gfdm
