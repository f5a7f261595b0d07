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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gfdmlab/config.hpp"

namespace gfdm {

// End-to-end transmission schemes. The GFDM-* entries share the uncoded
// transmitter and differ in the receiver; the precoded entries change both
// sides. OFDM is the single-timeslot degenerate configuration, kept as the
// conventional reference.
enum class Scheme {
    gfdm_mf,
    gfdm_zf,
    gfdm_mmse,
    gfdm_dsic,
    bidft_jp,
    bidftn,
    bidftm,
    lfdma_zf,
    ifdma_zf,
    svd_prec,
    ofdm,
};

const char *scheme_label(Scheme scheme);
Scheme parse_scheme(const std::string &label); // throws on unknown label
const std::vector<Scheme> &all_schemes();

struct ChannelSetting {
    enum class Kind { awgn, fsfc };
    Kind kind = Kind::fsfc;
    int n_taps = 16;          // must fit inside the cyclic prefix
    double pdp_divisor = 5.0; // exponential power-delay-profile decay
    bool cp_ebn0_loss = true; // charge the prefix overhead to Eb/N0 (fading only)

    bool operator==(const ChannelSetting &) const = default;
};

struct BerCurve {
    std::string scheme;
    Eigen::VectorXd ebn0_db;
    Eigen::VectorXd simulated;
    Eigen::VectorXd std_error;  // binomial standard error of the simulated point
    Eigen::VectorXd analytical; // NaN where the scheme has no closed-form overlay
};

struct BerOptions {
    int n_channels = 200; // independent channel realizations per point
    int n_blocks = 1;     // blocks per realization and point
    int dsic_passes = 4;
    uint64_t seed = 1;
    int workers = 1; // partitioning only; results do not depend on it
};

// Monte Carlo bit error rate over the Eb/N0 grid. A fixed seed pins channels,
// data and noise per (trial, point) independently of the worker count, and all
// schemes see the same draws, so scheme comparisons are paired.
BerCurve run_ber(const GfdmConfig &cfg, Scheme scheme, const ChannelSetting &channel,
                 const Eigen::VectorXd &ebn0_db, const BerOptions &opt);

struct PaprCcdf {
    std::string scheme;
    Eigen::VectorXd papr_grid_db; // 0.1 dB steps, first point below every sample
    Eigen::VectorXd ccdf;         // P(PAPR > grid point), starts at 1
};

struct PaprOptions {
    long n_blocks = 100000;
    uint64_t seed = 1;
    int workers = 1;
    // SVD precoding needs transmit-side channel knowledge; blocks cycle
    // through this many sampled realizations.
    int svd_channel_pool = 4;
    int svd_channel_taps = 16;
    double svd_pdp_divisor = 5.0;
};

// Peak-to-average power of max|x|^2 / mean|x|^2 per block of two back-to-back
// symbols, no prefix. The multiple-access mappings (LFDMA/IFDMA) are measured
// per user: one spreading chunk per time slot is active, which is the envelope
// an individual transmitter actually emits. All other schemes load the full
// block.
PaprCcdf papr_ccdf(const GfdmConfig &cfg, Scheme scheme, const PaprOptions &opt);

// Smallest grid value whose CCDF is <= prob (the largest grid value if the
// curve never falls that low).
double papr_at_ccdf(const PaprCcdf &curve, double prob);

// |DFT of the transmit waveform of data symbol l|, normalized to unit peak.
Eigen::VectorXd frequency_spread(const GfdmConfig &cfg, Scheme scheme, int symbol_index);

// Smallest number of bins holding the given fraction of spectrum energy.
int occupied_bins(const Eigen::VectorXd &spectrum, double energy_fraction);

struct ComplexityExtras {
    int dsic_passes = 4;      // J
    int spreading_factor = 4; // Q
    bool known_svd = true;    // channel factorization amortized across blocks
};

struct ComplexityReport {
    std::string scheme;
    double count = 0.0; // complex multiplications
    std::vector<std::pair<std::string, double>> terms;
    std::string note; // set where the count needs a caveat
};

// Closed-form complex-multiplication count per scheme; see complexity_schemes
// for the recognized row names. log2 terms are evaluated exactly (not rounded
// to integer stage counts).
ComplexityReport complexity_count(const std::string &scheme, int n_subcarriers, int n_timeslots,
                                  const ComplexityExtras &extras = {});

const std::vector<std::string> &complexity_schemes();

// True when run_ber fills the analytical column for the scheme.
bool scheme_has_analytic_ber(Scheme scheme);

// Mean per-symbol SINR of the scheme's analytic report, averaged over
// n_channels realizations. Only valid when scheme_has_analytic_ber.
Eigen::VectorXd sinr_profile(const GfdmConfig &cfg, Scheme scheme, const ChannelSetting &channel,
                             double ebn0_db, int n_channels, uint64_t seed);

// Residuals d_hat_l - B_ll d_l of the MMSE estimate, each component divided by
// its analytic standard deviation, pooled over channels, blocks and symbols.
// Returns 2*count reals (real and imaginary parts interleaved); under the
// Gaussian interference model these are standard normal.
std::vector<double> standardized_interference_samples(const GfdmConfig &cfg,
                                                      const ChannelSetting &channel, double ebn0_db,
                                                      int count, uint64_t seed);

} // namespace gfdm
