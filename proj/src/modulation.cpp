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

#include "gfdmlab/modulation.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gfdmlab/fft.hpp"

namespace gfdm {

Eigen::VectorXcd kernel(const PulseShape &g, int n_subcarriers, int k, int m)
{
    const int mn = static_cast<int>(g.taps.size());
    if (n_subcarriers < 1 || mn % n_subcarriers != 0)
        throw std::invalid_argument("pulse length must be a multiple of n_subcarriers");
    const int n_timeslots = mn / n_subcarriers;
    if (k < 0 || k >= n_subcarriers)
        throw std::out_of_range("subcarrier index out of range");
    if (m < 0 || m >= n_timeslots)
        throw std::out_of_range("timeslot index out of range");

    Eigen::VectorXcd a(mn);
    const double step = 2.0 * M_PI * k / n_subcarriers;
    for (int n = 0; n < mn; n++) {
        int shifted = (n - m * n_subcarriers) % mn;
        if (shifted < 0)
            shifted += mn;
        a(n) = g.taps(shifted) * std::polar(1.0, step * n);
    }
    return a;
}

ModulationMatrix build_modulation_matrix(const GfdmConfig &cfg, const PulseShape &g, Ordering ordering)
{
    const int mn = cfg.frame_size();
    if (g.taps.size() != mn)
        throw std::invalid_argument("pulse length does not match the configuration");

    ModulationMatrix a;
    a.entries.resize(mn, mn);
    a.ordering = ordering;
    a.source_pulse = g;
    a.n_subcarriers = cfg.n_subcarriers;
    a.n_timeslots = cfg.n_timeslots;

    for (int k = 0; k < cfg.n_subcarriers; k++)
        for (int m = 0; m < cfg.n_timeslots; m++)
            a.entries.col(a.column_of(k, m)) = kernel(g, cfg.n_subcarriers, k, m);
    return a;
}

std::vector<int> reorder_map(int n_subcarriers, int n_timeslots)
{
    std::vector<int> map(static_cast<size_t>(n_subcarriers) * n_timeslots);
    for (int m = 0; m < n_timeslots; m++)
        for (int k = 0; k < n_subcarriers; k++)
            map[static_cast<size_t>(m) * n_subcarriers + k] = k * n_timeslots + m;
    return map;
}

Eigen::VectorXcd modulate(const ModulationMatrix &a, const Eigen::VectorXcd &d)
{
    if (d.size() != a.entries.cols())
        throw std::invalid_argument("symbol vector size does not match the modulation matrix");
    return a.entries * d;
}

Eigen::VectorXcd modulate_fast(const GfdmConfig &cfg, const PulseShape &g, Ordering ordering,
                               const Eigen::VectorXcd &d)
{
    const int n = cfg.n_subcarriers;
    const int m_slots = cfg.n_timeslots;
    const int mn = n * m_slots;
    if (d.size() != mn)
        throw std::invalid_argument("symbol vector size does not match the configuration");
    if (g.taps.size() != mn)
        throw std::invalid_argument("pulse length does not match the configuration");

    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(mn);
    Eigen::VectorXcd slot(n);
    for (int m = 0; m < m_slots; m++) {
        // Subcarrier sum for slot m is an unnormalized N-point IDFT.
        for (int k = 0; k < n; k++)
            slot(k) = ordering == Ordering::n_ordered ? d(m * n + k) : d(k * m_slots + m);
        fft::inverse_inplace(slot.data(), n);
        for (int i = 0; i < mn; i++) {
            int shifted = (i - m * n) % mn;
            if (shifted < 0)
                shifted += mn;
            x(i) += g.taps(shifted) * slot(i % n);
        }
    }
    return x;
}

Eigen::VectorXcd add_cp(const Eigen::VectorXcd &x, int cp_length)
{
    if (cp_length < 0 || cp_length > x.size())
        throw std::invalid_argument("cp_length must lie in [0, block length]");
    Eigen::VectorXcd out(x.size() + cp_length);
    out.head(cp_length) = x.tail(cp_length);
    out.tail(x.size()) = x;
    return out;
}

Eigen::VectorXcd remove_cp(const Eigen::VectorXcd &y_cp, int cp_length, int channel_length)
{
    if (cp_length < 0 || channel_length < 1)
        throw std::invalid_argument("cp_length must be >= 0 and channel_length >= 1");
    const Eigen::Index mn = y_cp.size() - cp_length - (channel_length - 1);
    if (mn < 1)
        throw std::invalid_argument("received record shorter than cp_length + channel_length - 1");
    return y_cp.segment(cp_length, mn);
}

Frame make_frame(const Eigen::VectorXcd &x, int cp_length)
{
    return Frame{x, add_cp(x, cp_length)};
}

} // namespace gfdm
