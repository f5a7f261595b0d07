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

#include "gfdmlab/config.hpp"
#include "gfdmlab/pulse.hpp"

namespace gfdm {

// Column layout of the modulation matrix. n_ordered groups columns by time
// slot (column m*N+k carries subcarrier k, slot m); m_ordered groups them by
// subcarrier (column k*M+m). Same column set, different order.
enum class Ordering { n_ordered, m_ordered };

struct ModulationMatrix {
    Eigen::MatrixXcd entries; // MN x MN, unit-norm columns
    Ordering ordering = Ordering::n_ordered;
    PulseShape source_pulse;
    int n_subcarriers = 0;
    int n_timeslots = 0;

    int column_of(int k, int m) const
    {
        return ordering == Ordering::n_ordered ? m * n_subcarriers + k : k * n_timeslots + m;
    }
};

// One transmitted block: payload x and its cyclic-prefixed copy.
struct Frame {
    Eigen::VectorXcd payload;
    Eigen::VectorXcd with_cp;
};

// a_km(n) = g((n - m*N) mod MN) * exp(j 2 pi k n / N)
Eigen::VectorXcd kernel(const PulseShape &g, int n_subcarriers, int k, int m);

ModulationMatrix build_modulation_matrix(const GfdmConfig &cfg, const PulseShape &g, Ordering ordering);

// Permutation p with p[m*N+k] = k*M+m; A_n.col(l) == A_m.col(p[l]).
std::vector<int> reorder_map(int n_subcarriers, int n_timeslots);

Eigen::VectorXcd modulate(const ModulationMatrix &a, const Eigen::VectorXcd &d);

// Same result through M length-N transforms instead of the dense product.
Eigen::VectorXcd modulate_fast(const GfdmConfig &cfg, const PulseShape &g, Ordering ordering,
                               const Eigen::VectorXcd &d);

Eigen::VectorXcd add_cp(const Eigen::VectorXcd &x, int cp_length);

// Strips the prefix and the convolution tail: keeps samples
// [cp_length, cp_length + MN) of a length MN+cp_length+channel_length-1 record.
Eigen::VectorXcd remove_cp(const Eigen::VectorXcd &y_cp, int cp_length, int channel_length);

Frame make_frame(const Eigen::VectorXcd &x, int cp_length);

} // namespace gfdm
