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

#include "gfdmlab/qam.hpp"

#include <cmath>
#include <stdexcept>

namespace gfdm {

namespace {

unsigned gray_encode(unsigned i)
{
    return i ^ (i >> 1);
}

unsigned gray_decode(unsigned g)
{
    unsigned i = g;
    for (unsigned shift = 1; shift < 8 * sizeof(unsigned); shift <<= 1)
        i ^= i >> shift;
    return i;
}

} // namespace

QamMapper::QamMapper(int mod_order, double average_power) : order_(mod_order), power_(average_power)
{
    if (mod_order != 4 && mod_order != 16 && mod_order != 64)
        throw std::invalid_argument("mod_order must be 4, 16 or 64");
    if (!(average_power > 0.0))
        throw std::invalid_argument("average_power must be positive");
    levels_ = static_cast<int>(std::lround(std::sqrt(static_cast<double>(mod_order))));
    bits_per_axis_ = static_cast<int>(std::lround(std::log2(static_cast<double>(levels_))));
    // Levels are odd integers 2i-(L-1); this scale gives E|z|^2 = average_power.
    scale_ = std::sqrt(3.0 * average_power / (2.0 * (mod_order - 1)));
}

std::complex<double> QamMapper::map_bits(const uint8_t *bits) const
{
    unsigned gi = 0, gq = 0;
    for (int b = 0; b < bits_per_axis_; b++) {
        gi = (gi << 1) | (bits[b] & 1);
        gq = (gq << 1) | (bits[bits_per_axis_ + b] & 1);
    }
    double re = (2.0 * gray_decode(gi) - (levels_ - 1)) * scale_;
    double im = (2.0 * gray_decode(gq) - (levels_ - 1)) * scale_;
    return {re, im};
}

int QamMapper::nearest_level(double x) const
{
    int i = static_cast<int>(std::lround((x / scale_ + (levels_ - 1)) / 2.0));
    return std::min(std::max(i, 0), levels_ - 1);
}

void QamMapper::unmap_symbol(std::complex<double> z, uint8_t *bits) const
{
    unsigned gi = gray_encode(static_cast<unsigned>(nearest_level(z.real())));
    unsigned gq = gray_encode(static_cast<unsigned>(nearest_level(z.imag())));
    for (int b = 0; b < bits_per_axis_; b++) {
        bits[b] = (gi >> (bits_per_axis_ - 1 - b)) & 1;
        bits[bits_per_axis_ + b] = (gq >> (bits_per_axis_ - 1 - b)) & 1;
    }
}

std::complex<double> QamMapper::hard_decision(std::complex<double> z) const
{
    double re = (2.0 * nearest_level(z.real()) - (levels_ - 1)) * scale_;
    double im = (2.0 * nearest_level(z.imag()) - (levels_ - 1)) * scale_;
    return {re, im};
}

Eigen::VectorXcd QamMapper::map_block(const std::vector<uint8_t> &bits) const
{
    const int bps = bits_per_symbol();
    if (bits.size() % bps != 0)
        throw std::invalid_argument("bit count must be a multiple of bits_per_symbol");
    Eigen::VectorXcd out(bits.size() / bps);
    for (int s = 0; s < out.size(); s++)
        out(s) = map_bits(bits.data() + static_cast<size_t>(s) * bps);
    return out;
}

std::vector<uint8_t> QamMapper::unmap_block(const Eigen::VectorXcd &symbols) const
{
    const int bps = bits_per_symbol();
    std::vector<uint8_t> bits(static_cast<size_t>(symbols.size()) * bps);
    for (int s = 0; s < symbols.size(); s++)
        unmap_symbol(symbols(s), bits.data() + static_cast<size_t>(s) * bps);
    return bits;
}

Eigen::VectorXcd QamMapper::random_symbols(RngStream &rng, int count) const
{
    Eigen::VectorXcd out(count);
    for (int s = 0; s < count; s++) {
        int i = std::min(levels_ - 1, static_cast<int>(rng.uniform() * levels_));
        int q = std::min(levels_ - 1, static_cast<int>(rng.uniform() * levels_));
        out(s) = {(2.0 * i - (levels_ - 1)) * scale_, (2.0 * q - (levels_ - 1)) * scale_};
    }
    return out;
}

} // namespace gfdm
