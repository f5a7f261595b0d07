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

#include "gfdmlab/modulation.hpp"
#include "gfdmlab/pulse.hpp"
#include "gfdmlab/rng.hpp"

using namespace gfdm;

namespace {

GfdmConfig geometry(int n, int m, double rolloff = 0.5)
{
    GfdmConfig cfg;
    cfg.n_subcarriers = n;
    cfg.n_timeslots = m;
    cfg.rolloff = rolloff;
    return cfg;
}

// Oracle: the transmit waveform of symbol (k, m) written as the literal
// time/frequency shift of the prototype, sample by sample.
Eigen::VectorXcd oracle_kernel(const Eigen::VectorXd &g, int n_subcarriers, int k, int m)
{
    const int mn = static_cast<int>(g.size());
    Eigen::VectorXcd col(mn);
    for (int t = 0; t < mn; t++) {
        const int shifted = ((t - m * n_subcarriers) % mn + mn) % mn;
        col(t) = g(shifted) * std::polar(1.0, 2.0 * M_PI * k * t / n_subcarriers);
    }
    return col;
}

Eigen::VectorXcd random_vector(int n, uint64_t seed)
{
    RngStream rng(seed, {5});
    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; i++)
        x(i) = rng.cnormal(1.0);
    return x;
}

} // namespace

TEST_CASE("kernel matches the shift-and-rotate oracle")
{
    const GfdmConfig cfg = geometry(4, 3);
    const PulseShape pulse = make_rrc_pulse(cfg);
    for (int k = 0; k < 4; k++)
        for (int m = 0; m < 3; m++) {
            const Eigen::VectorXcd got = kernel(pulse, 4, k, m);
            const Eigen::VectorXcd want = oracle_kernel(pulse.taps, 4, k, m);
            CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-12);
        }
}

TEST_CASE("column layouts follow the two orderings")
{
    const GfdmConfig cfg = geometry(4, 3);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a_n = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const ModulationMatrix a_m = build_modulation_matrix(cfg, pulse, Ordering::m_ordered);
    for (int k = 0; k < 4; k++)
        for (int m = 0; m < 3; m++) {
            const Eigen::VectorXcd want = oracle_kernel(pulse.taps, 4, k, m);
            CHECK((a_n.entries.col(m * 4 + k) - want).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((a_m.entries.col(k * 3 + m) - want).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK(a_n.column_of(k, m) == m * 4 + k);
            CHECK(a_m.column_of(k, m) == k * 3 + m);
        }
}

TEST_CASE("reorder map is the dual permutation")
{
    const int n = 4, m = 3;
    const std::vector<int> map = reorder_map(n, m);
    REQUIRE(map.size() == static_cast<size_t>(n * m));
    for (int slot = 0; slot < m; slot++)
        for (int k = 0; k < n; k++)
            CHECK(map[static_cast<size_t>(slot * n + k)] == k * m + slot);
}

TEST_CASE("columns carry unit energy")
{
    const GfdmConfig cfg = geometry(8, 5, 0.9);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    for (int c = 0; c < a.entries.cols(); c++)
        CHECK(a.entries.col(c).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dense modulate applies the matrix")
{
    const GfdmConfig cfg = geometry(4, 3);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const Eigen::VectorXcd d = random_vector(12, 17);
    CHECK((modulate(a, d) - a.entries * d).norm() <= 1e-12);
}

TEST_CASE("fast modulator agrees with the dense product")
{
    for (auto ordering : {Ordering::n_ordered, Ordering::m_ordered}) {
        for (double rolloff : {0.0, 0.5, 1.0}) {
            const GfdmConfig cfg = geometry(8, 5, rolloff);
            const PulseShape pulse = make_rrc_pulse(cfg);
            const ModulationMatrix a = build_modulation_matrix(cfg, pulse, ordering);
            const Eigen::VectorXcd d = random_vector(40, 23);
            const Eigen::VectorXcd want = a.entries * d;
            const Eigen::VectorXcd got = modulate_fast(cfg, pulse, ordering, d);
            CHECK((got - want).norm() <= 1e-10 * want.norm());
        }
    }
}

TEST_CASE("single slot reduces to the unitary inverse Fourier matrix")
{
    const GfdmConfig cfg = geometry(8, 1, 0.7);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const Eigen::MatrixXcd gram = a.entries.adjoint() * a.entries;
    CHECK((gram - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-12);
    for (int k = 0; k < 8; k++)
        for (int t = 0; t < 8; t++) {
            const std::complex<double> want =
                std::polar(1.0 / std::sqrt(8.0), 2.0 * M_PI * k * t / 8.0);
            CHECK(std::abs(a.entries(t, k) - want) <= 1e-12);
        }
}

TEST_CASE("prefix insertion repeats the block tail")
{
    const Eigen::VectorXcd x = random_vector(12, 31);
    const Eigen::VectorXcd x_cp = add_cp(x, 4);
    REQUIRE(x_cp.size() == 16);
    for (int i = 0; i < 4; i++)
        CHECK(x_cp(i) == x(8 + i));
    for (int i = 0; i < 12; i++)
        CHECK(x_cp(4 + i) == x(i));
}

TEST_CASE("prefix removal inverts insertion for a one-tap channel")
{
    const Eigen::VectorXcd x = random_vector(12, 37);
    const Eigen::VectorXcd y = remove_cp(add_cp(x, 4), 4, 1);
    CHECK((y - x).norm() <= 1e-15);
}

TEST_CASE("frames pair the payload with its prefixed copy")
{
    const Eigen::VectorXcd x = random_vector(6, 41);
    const Frame frame = make_frame(x, 2);
    CHECK((frame.payload - x).norm() <= 1e-15);
    REQUIRE(frame.with_cp.size() == 8);
    CHECK((frame.with_cp - add_cp(x, 2)).norm() <= 1e-15);
}
