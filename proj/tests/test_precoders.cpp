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

#include "gfdmlab/channel.hpp"
#include "gfdmlab/modulation.hpp"
#include "gfdmlab/precoders.hpp"
#include "gfdmlab/pulse.hpp"
#include "gfdmlab/qam.hpp"
#include "gfdmlab/rng.hpp"

using namespace gfdm;

namespace {

GfdmConfig geometry(int n, int m, int q = 1)
{
    GfdmConfig cfg;
    cfg.n_subcarriers = n;
    cfg.n_timeslots = m;
    cfg.rolloff = 0.5;
    cfg.mod_order = 4;
    cfg.cp_length = n;
    cfg.spreading_factor = q;
    return cfg;
}

Eigen::VectorXcd random_vector(int n, uint64_t seed)
{
    RngStream rng(seed, {31});
    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; i++)
        x(i) = rng.cnormal(1.0);
    return x;
}

ChannelRealization random_channel(int frame, uint64_t seed, int taps = 4)
{
    RngStream rng(seed, {32});
    return sample_channel(taps, exponential_pdp(taps, 5.0), rng, frame);
}

double unitarity_defect(const Eigen::MatrixXcd &p)
{
    const int n = static_cast<int>(p.cols());
    return (p.adjoint() * p - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("every structured precoder is unitary")
{
    const GfdmConfig cfg = geometry(8, 5, 4);
    for (PrecoderKind kind : {PrecoderKind::identity, PrecoderKind::bidft_n,
                              PrecoderKind::bidft_m, PrecoderKind::dft_lfdma,
                              PrecoderKind::dft_ifdma}) {
        const PrecoderSpec p = make_precoder(kind, cfg);
        INFO(to_string(kind));
        CHECK(unitarity_defect(p.matrix) <= 1e-10);
    }
}

TEST_CASE("slot-direction spreading has the expected entries")
{
    const int n = 4, m = 3;
    const PrecoderSpec p = make_precoder(PrecoderKind::bidft_n, geometry(n, m));
    for (int pr = 0; pr < m; pr++)
        for (int i = 0; i < n; i++)
            for (int qc = 0; qc < m; qc++)
                for (int j = 0; j < n; j++) {
                    const std::complex<double> want =
                        i == j ? std::polar(1.0 / std::sqrt(3.0), 2.0 * M_PI * pr * qc / 3.0)
                               : std::complex<double>(0.0, 0.0);
                    CHECK(std::abs(p.matrix(pr * n + i, qc * n + j) - want) <= 1e-12);
                }
}

TEST_CASE("chunk mappings place DFT outputs on the intended bins")
{
    const GfdmConfig cfg = geometry(8, 2, 4); // n_dft = 2
    const int n = 8, n_dft = 2, q = 4;
    const PrecoderSpec lf = make_precoder(PrecoderKind::dft_lfdma, cfg);
    const PrecoderSpec il = make_precoder(PrecoderKind::dft_ifdma, cfg);
    CHECK(lf.n_dft == n_dft);
    CHECK(il.spreading_factor == q);

    for (int m = 0; m < 2; m++)
        for (int c = 0; c < q; c++)
            for (int i = 0; i < n_dft; i++)
                for (int a = 0; a < n_dft; a++) {
                    const std::complex<double> want =
                        std::polar(1.0 / std::sqrt(2.0), -2.0 * M_PI * i * a / n_dft);
                    const int col = m * n + c * n_dft + a;
                    CHECK(std::abs(lf.matrix(m * n + c * n_dft + i, col) - want) <= 1e-12);
                    CHECK(std::abs(il.matrix(m * n + c + i * q, col) - want) <= 1e-12);
                }
}

TEST_CASE("fast application equals the dense product for every kind")
{
    const GfdmConfig cfg = geometry(8, 5, 4);
    const Eigen::VectorXcd d = random_vector(40, 41);
    for (PrecoderKind kind : {PrecoderKind::identity, PrecoderKind::bidft_n,
                              PrecoderKind::bidft_m, PrecoderKind::dft_lfdma,
                              PrecoderKind::dft_ifdma}) {
        const PrecoderSpec p = make_precoder(kind, cfg);
        INFO(to_string(kind));
        CHECK((apply_precoder_fast(p, cfg, d) - apply_precoder(p, d)).norm() <= 1e-10);
    }
}

TEST_CASE("interleaved spreading collapses to a repeated single-carrier signal")
{
    // One slot: the modulation matrix is the unitary IDFT, so the classical
    // identity x(t) = exp(j 2 pi c t / N) d(t mod N/Q) / sqrt(Q) holds per chunk.
    const GfdmConfig cfg = geometry(16, 1, 4);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const PrecoderSpec p = make_precoder(PrecoderKind::dft_ifdma, cfg);
    const QamMapper qam(4, 1.0);
    RngStream rng(42, {1});
    const int n_dft = 4, q = 4;

    for (int c = 0; c < q; c++) {
        Eigen::VectorXcd d = Eigen::VectorXcd::Zero(16);
        d.segment(c * n_dft, n_dft) = qam.random_symbols(rng, n_dft);
        const Eigen::VectorXcd x = a.entries * apply_precoder(p, d);
        for (int t = 0; t < 16; t++) {
            const std::complex<double> want =
                std::polar(1.0 / std::sqrt(4.0), 2.0 * M_PI * c * t / 16.0) *
                d(c * n_dft + t % n_dft);
            CHECK(std::abs(x(t) - want) <= 1e-12);
        }
        // Constant modulus for a PSK alphabet: the flat-envelope property that
        // motivates the interleaved mapping in the first place.
        for (int t = 0; t < 16; t++)
            CHECK(std::abs(x(t)) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("localized spreading keeps the symbols at the Q-spaced samples")
{
    const GfdmConfig cfg = geometry(16, 1, 4);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const PrecoderSpec p = make_precoder(PrecoderKind::dft_lfdma, cfg);
    RngStream rng(43, {1});
    const int n_dft = 4;

    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(16);
    d.head(n_dft) = random_vector(n_dft, 44);
    const Eigen::VectorXcd x = a.entries * apply_precoder(p, d);
    for (int s = 0; s < n_dft; s++)
        CHECK(std::abs(x(4 * s) - d(s) / 2.0) <= 1e-12);
}

TEST_CASE("channel factorization reconstructs the effective channel")
{
    const GfdmConfig cfg = geometry(8, 3);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const ChannelRealization ch = random_channel(24, 50);
    const Eigen::MatrixXcd ha = ch.circulant() * a.entries;

    const SvdFactors f = svd_factorize(ha);
    CHECK(unitarity_defect(f.u) <= 1e-9);
    CHECK(unitarity_defect(f.v) <= 1e-9);
    for (int i = 0; i + 1 < f.singular_values.size(); i++)
        CHECK(f.singular_values(i) >= f.singular_values(i + 1));

    const Eigen::MatrixXcd back =
        f.u * f.singular_values.asDiagonal() * f.v.adjoint();
    CHECK((back - ha).cwiseAbs().maxCoeff() <= 1e-9);

    Eigen::JacobiSVD<Eigen::MatrixXcd> ref(ha);
    CHECK((f.singular_values - ref.singularValues()).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("factorization requires a square matrix and precoding requires factors")
{
    CHECK_THROWS_AS(svd_factorize(Eigen::MatrixXcd::Zero(4, 3)), std::invalid_argument);
    CHECK_THROWS_AS(make_precoder(PrecoderKind::svd, geometry(8, 3)), std::invalid_argument);

    SvdFactors wrong;
    wrong.u = wrong.v = Eigen::MatrixXcd::Identity(5, 5);
    wrong.singular_values = Eigen::VectorXd::Ones(5);
    CHECK_THROWS_AS(make_precoder(PrecoderKind::svd, geometry(8, 3), &wrong),
                    std::invalid_argument);

    GfdmConfig bad = geometry(8, 3);
    bad.spreading_factor = 3; // does not divide 8
    CHECK_THROWS_AS(make_precoder(PrecoderKind::dft_lfdma, bad), std::invalid_argument);
}

TEST_CASE("all precoded chains reconstruct noiselessly through a fading channel")
{
    const GfdmConfig cfg = geometry(8, 3, 2);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a_n = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const ModulationMatrix a_m = build_modulation_matrix(cfg, pulse, Ordering::m_ordered);
    const ChannelRealization ch = random_channel(24, 51);
    const Eigen::VectorXcd d = random_vector(24, 52);
    const double nv = 0.1, pd = 1.0;

    SUBCASE("joint processing")
    {
        const PrecoderSpec f = make_precoder(PrecoderKind::bidft_n, cfg);
        const Eigen::VectorXcd y = ch.circulant() * (a_n.entries * apply_precoder(f, d));
        const PrecodedEstimate est = bidft_joint_receive(y, ch, a_n, nv, pd);
        CHECK((est.symbols - d).norm() <= 1e-8 * d.norm());
    }

    SUBCASE("two-stage, slot direction")
    {
        const PrecoderSpec f = make_precoder(PrecoderKind::bidft_n, cfg);
        const Eigen::VectorXcd y = ch.circulant() * (a_n.entries * apply_precoder(f, d));
        const PrecodedEstimate est = bidft_two_stage_receive(y, ch, a_n, nv, pd);
        CHECK((est.symbols - d).norm() <= 1e-8 * d.norm());
    }

    SUBCASE("two-stage, subcarrier direction")
    {
        const PrecoderSpec f = make_precoder(PrecoderKind::bidft_m, cfg);
        const Eigen::VectorXcd y = ch.circulant() * (a_m.entries * apply_precoder(f, d));
        const PrecodedEstimate est = bidft_two_stage_receive(y, ch, a_m, nv, pd);
        CHECK((est.symbols - d).norm() <= 1e-8 * d.norm());
    }

    SUBCASE("DFT spreading, both mappings")
    {
        for (PrecoderKind kind : {PrecoderKind::dft_lfdma, PrecoderKind::dft_ifdma}) {
            const PrecoderSpec p = make_precoder(kind, cfg);
            const Eigen::VectorXcd y = ch.circulant() * (a_n.entries * apply_precoder(p, d));
            const PrecodedEstimate est = dft_precoded_receive(y, ch, a_n, p, nv, pd);
            INFO(to_string(kind));
            CHECK((est.symbols - d).norm() <= 1e-8 * d.norm());
        }
    }

    SUBCASE("SVD precoding")
    {
        const SvdFactors f = svd_factorize(ch.circulant() * a_n.entries);
        const PrecoderSpec p = make_precoder(PrecoderKind::svd, cfg, &f);
        const Eigen::VectorXcd y = ch.circulant() * (a_n.entries * apply_precoder(p, d));
        const PrecodedEstimate est = svd_precode_receive(y, f, nv, pd);
        for (int l = 0; l < 24; l++)
            CHECK(std::abs(est.symbols(l) / f.singular_values(l) - d(l)) <= 1e-8);
        // Reported signal power follows the singular values.
        CHECK(est.snr.p_sig(0) == doctest::Approx(pd * f.singular_values(0) *
                                                  f.singular_values(0)));
    }
}

TEST_CASE("reported noise power matches the measured estimator variance")
{
    const GfdmConfig cfg = geometry(8, 3);
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const ChannelRealization ch = random_channel(24, 53);
    const double nv = 0.25;
    const int mn = 24, rounds = 4000;

    SUBCASE("joint processing")
    {
        const BidftJointEqualizer eq = make_bidft_joint_equalizer(ch, a, nv, 1.0);
        RngStream rng(54, {1});
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(mn);
        Eigen::VectorXcd v(mn);
        for (int r = 0; r < rounds; r++) {
            for (int i = 0; i < mn; i++)
                v(i) = rng.cnormal(nv);
            acc += (eq.w * v).cwiseAbs2();
        }
        for (int l = 0; l < mn; l++)
            CHECK(acc(l) / rounds == doctest::Approx(eq.snr.p_npp(l)).epsilon(0.15));
    }

    SUBCASE("two-stage")
    {
        const BidftTwoStage ts = make_bidft_two_stage(a);
        const SinrReport rep = bidft_two_stage_snr(ts, ch, nv, 1.0);
        RngStream rng(55, {1});
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(mn);
        Eigen::VectorXcd v(mn);
        for (int r = 0; r < rounds; r++) {
            for (int i = 0; i < mn; i++)
                v(i) = rng.cnormal(nv);
            acc += (ts.front * fde_equalize(v, ch)).cwiseAbs2();
        }
        for (int l = 0; l < mn; l++)
            CHECK(acc(l) / rounds == doctest::Approx(rep.p_npp(l)).epsilon(0.15));
    }

    SUBCASE("DFT spreading")
    {
        const GfdmConfig scfg = geometry(8, 3, 2);
        const PrecoderSpec p = make_precoder(PrecoderKind::dft_lfdma, scfg);
        const DftEqualizer eq = make_dft_equalizer(ch, a, p, nv, 1.0);
        // Row-norm identity, checked directly rather than by simulation.
        for (int l = 0; l < mn; l++)
            CHECK(eq.snr.p_npp(l) ==
                  doctest::Approx(nv * eq.w.row(l).squaredNorm()).epsilon(1e-12));
    }
}

TEST_CASE("precoded error-rate average is the symbol-wise mean")
{
    std::vector<SinrReport> reports(1);
    reports[0].gamma = Eigen::VectorXd::Constant(4, 6.0);
    CHECK(precoded_ber_average(reports, 4) ==
          doctest::Approx(ber_qam_awgn(6.0, 4)).epsilon(1e-12));
}
