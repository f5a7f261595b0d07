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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gfdmlab/rng.hpp"

namespace gfdm {

// Square QAM with per-axis Gray labeling. Bits map MSB first, the first half
// of a symbol's bits selecting the in-phase level and the second half the
// quadrature level. Average symbol power equals average_power.
class QamMapper {
  public:
    explicit QamMapper(int mod_order, double average_power = 1.0);

    int order() const { return order_; }
    int bits_per_symbol() const { return 2 * bits_per_axis_; }
    double average_power() const { return power_; }

    std::complex<double> map_bits(const uint8_t *bits) const;
    void unmap_symbol(std::complex<double> z, uint8_t *bits) const;
    std::complex<double> hard_decision(std::complex<double> z) const;

    Eigen::VectorXcd map_block(const std::vector<uint8_t> &bits) const;
    std::vector<uint8_t> unmap_block(const Eigen::VectorXcd &symbols) const;

    // Uniform draw over the constellation (PAPR and distribution tests).
    Eigen::VectorXcd random_symbols(RngStream &rng, int count) const;

  private:
    int nearest_level(double x) const;

    int order_;
    int levels_;        // per axis
    int bits_per_axis_;
    double scale_;
    double power_;
};

} // namespace gfdm
