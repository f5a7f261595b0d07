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

#include "gfdmlab/precoders.hpp"

#include <cmath>
#include <stdexcept>

#include "gfdmlab/fft.hpp"

namespace gfdm {

const char *to_string(PrecoderKind kind)
{
    switch (kind) {
    case PrecoderKind::identity:
        return "identity";
    case PrecoderKind::bidft_n:
        return "bidft_n";
    case PrecoderKind::bidft_m:
        return "bidft_m";
    case PrecoderKind::dft_lfdma:
        return "dft_lfdma";
    case PrecoderKind::dft_ifdma:
        return "dft_ifdma";
    case PrecoderKind::svd:
        return "svd";
    }
    return "unknown";
}

SvdFactors svd_factorize(const Eigen::MatrixXcd &ha)
{
    const int n = static_cast<int>(ha.rows());
    if (ha.cols() != n)
        throw std::invalid_argument("effective channel must be square");

    Eigen::MatrixXcd gram = ha.adjoint() * ha;
    gram = 0.5 * (gram + gram.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed in svd_factorize");

    // Eigenvalues come ascending; singular values must descend.
    SvdFactors f;
    f.singular_values.resize(n);
    f.v.resize(n, n);
    for (int i = 0; i < n; i++) {
        double lam = std::max(0.0, es.eigenvalues()(n - 1 - i));
        f.singular_values(i) = std::sqrt(lam);
        f.v.col(i) = es.eigenvectors().col(n - 1 - i);
    }

    double smax = f.singular_values(0);
    if (smax == 0.0 || f.singular_values(n - 1) < 1e-10 * smax) {
        // Near-singular channel: U = HA V S^{-1} would lose orthogonality.
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ha, Eigen::ComputeFullU | Eigen::ComputeFullV);
        return SvdFactors{svd.matrixU(), svd.matrixV(), svd.singularValues()};
    }

    f.u = ha * f.v * f.singular_values.cwiseInverse().asDiagonal();
    return f;
}

namespace {

// Normalized DFT of each length-n_dft chunk, outputs scattered by the mapping.
Eigen::MatrixXcd dft_spreading_matrix(const GfdmConfig &cfg, bool interleaved)
{
    const int n = cfg.n_subcarriers;
    const int q = cfg.spreading_factor;
    const int n_dft = n / q;
    const int mn = cfg.frame_size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_dft));

    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(mn, mn);
    for (int m = 0; m < cfg.n_timeslots; m++)
        for (int c = 0; c < q; c++)
            for (int i = 0; i < n_dft; i++) {
                int row = m * n + (interleaved ? c + i * q : c * n_dft + i);
                for (int a = 0; a < n_dft; a++) {
                    int col = m * n + c * n_dft + a;
                    p(row, col) = scale * std::polar(1.0, -2.0 * M_PI * static_cast<double>(i) * a / n_dft);
                }
            }
    return p;
}

} // namespace

PrecoderSpec make_precoder(PrecoderKind kind, const GfdmConfig &cfg, const SvdFactors *factors)
{
    const int mn = cfg.frame_size();
    PrecoderSpec p;
    p.kind = kind;

    switch (kind) {
    case PrecoderKind::identity:
        p.matrix = Eigen::MatrixXcd::Identity(mn, mn);
        break;
    case PrecoderKind::bidft_n:
        p.matrix = block_fourier(cfg.n_subcarriers, cfg.n_timeslots).matrix;
        break;
    case PrecoderKind::bidft_m:
        p.matrix = block_fourier(cfg.n_timeslots, cfg.n_subcarriers).matrix;
        break;
    case PrecoderKind::dft_lfdma:
    case PrecoderKind::dft_ifdma: {
        if (cfg.spreading_factor < 1 || cfg.n_subcarriers % cfg.spreading_factor != 0)
            throw std::invalid_argument("spreading_factor must divide n_subcarriers");
        p.spreading_factor = cfg.spreading_factor;
        p.n_dft = cfg.n_subcarriers / cfg.spreading_factor;
        p.matrix = dft_spreading_matrix(cfg, kind == PrecoderKind::dft_ifdma);
        break;
    }
    case PrecoderKind::svd:
        if (factors == nullptr)
            throw std::invalid_argument("SVD precoding requires channel factors at the transmitter");
        if (factors->v.rows() != mn)
            throw std::invalid_argument("SVD factors do not match the configuration");
        p.matrix = factors->v;
        break;
    }
    return p;
}

Eigen::VectorXcd apply_precoder(const PrecoderSpec &p, const Eigen::VectorXcd &d)
{
    if (d.size() != p.matrix.cols())
        throw std::invalid_argument("symbol vector does not match the precoder");
    return p.matrix * d;
}

Eigen::VectorXcd apply_precoder_fast(const PrecoderSpec &p, const GfdmConfig &cfg,
                                     const Eigen::VectorXcd &d)
{
    const int n = cfg.n_subcarriers;
    const int m_slots = cfg.n_timeslots;
    const int mn = cfg.frame_size();
    if (d.size() != mn)
        throw std::invalid_argument("symbol vector does not match the configuration");

    switch (p.kind) {
    case PrecoderKind::identity:
        return d;

    case PrecoderKind::bidft_n: {
        // W_M across the slot index, independently for each subcarrier slot n.
        Eigen::VectorXcd out(mn), line(m_slots);
        const double scale = 1.0 / std::sqrt(static_cast<double>(m_slots));
        for (int i = 0; i < n; i++) {
            for (int q = 0; q < m_slots; q++)
                line(q) = d(q * n + i);
            fft::inverse_inplace(line.data(), m_slots);
            for (int q = 0; q < m_slots; q++)
                out(q * n + i) = scale * line(q);
        }
        return out;
    }

    case PrecoderKind::bidft_m: {
        Eigen::VectorXcd out(mn), line(n);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (int i = 0; i < m_slots; i++) {
            for (int q = 0; q < n; q++)
                line(q) = d(q * m_slots + i);
            fft::inverse_inplace(line.data(), n);
            for (int q = 0; q < n; q++)
                out(q * m_slots + i) = scale * line(q);
        }
        return out;
    }

    case PrecoderKind::dft_lfdma:
    case PrecoderKind::dft_ifdma: {
        const int q = p.spreading_factor;
        const int n_dft = p.n_dft;
        if (q < 1 || n_dft * q != n)
            throw std::invalid_argument("precoder metadata does not match the configuration");
        Eigen::VectorXcd out(mn), chunk(n_dft);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_dft));
        for (int m = 0; m < m_slots; m++)
            for (int c = 0; c < q; c++) {
                chunk = d.segment(m * n + c * n_dft, n_dft);
                fft::forward_inplace(chunk.data(), n_dft);
                for (int i = 0; i < n_dft; i++) {
                    int row = m * n + (p.kind == PrecoderKind::dft_ifdma ? c + i * q : c * n_dft + i);
                    out(row) = scale * chunk(i);
                }
            }
        return out;
    }

    case PrecoderKind::svd:
        return p.matrix * d;
    }
    throw std::logic_error("unreachable precoder kind");
}

BidftJointEqualizer make_bidft_joint_equalizer(const ChannelRealization &ch,
                                               const ModulationMatrix &a, double noise_var,
                                               double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    const int block = a.ordering == Ordering::n_ordered ? a.n_subcarriers : a.n_timeslots;
    const int n_blocks = a.ordering == Ordering::n_ordered ? a.n_timeslots : a.n_subcarriers;

    Eigen::MatrixXcd ha = ch.circulant() * a.entries;
    Eigen::MatrixXcd gram = ha.adjoint() * ha;
    gram = 0.5 * (gram + gram.adjoint().eval());

    BlockDiagonal d = block_diagonalize_fast(gram, block);
    BlockDiagonal dinv = invert_block_diagonal(d); // names the singular block

    BlockFourier f = block_fourier(block, n_blocks);

    BidftJointEqualizer eq;
    eq.w = dinv.dense() * f.matrix.adjoint() * ha.adjoint();

    // Estimate is d + D^{-1} (HAF)^H v; noise covariance noise_var * D^{-1}.
    const int mn = block * n_blocks;
    eq.snr.p_sig = Eigen::VectorXd::Constant(mn, sym_power);
    eq.snr.p_inr = Eigen::VectorXd::Zero(mn);
    eq.snr.p_npp.resize(mn);
    for (int r = 0; r < n_blocks; r++)
        for (int i = 0; i < block; i++)
            eq.snr.p_npp(r * block + i) = noise_var * dinv.blocks[r](i, i).real();
    eq.snr.gamma = eq.snr.p_sig.cwiseQuotient(eq.snr.p_npp);
    return eq;
}

PrecodedEstimate bidft_joint_receive(const Eigen::VectorXcd &y, const ChannelRealization &ch,
                                     const ModulationMatrix &a, double noise_var, double sym_power)
{
    BidftJointEqualizer eq = make_bidft_joint_equalizer(ch, a, noise_var, sym_power);
    return PrecodedEstimate{eq.w * y, std::move(eq.snr)};
}

BidftTwoStage make_bidft_two_stage(const ModulationMatrix &a)
{
    const int block = a.ordering == Ordering::n_ordered ? a.n_subcarriers : a.n_timeslots;
    const int n_blocks = a.ordering == Ordering::n_ordered ? a.n_timeslots : a.n_subcarriers;

    Eigen::MatrixXcd gram = a.entries.adjoint() * a.entries;
    gram = 0.5 * (gram + gram.adjoint().eval());
    BlockDiagonal dt = block_diagonalize_fast(gram, block);
    BlockDiagonal dtinv = invert_block_diagonal(dt);

    BlockFourier f = block_fourier(block, n_blocks);
    Eigen::MatrixXcd af = a.entries * f.matrix;

    BidftTwoStage ts;
    ts.front = dtinv.dense() * af.adjoint();
    ts.spread_t = af * dtinv.dense().adjoint();
    return ts;
}

SinrReport bidft_two_stage_snr(const BidftTwoStage &ts, const ChannelRealization &ch,
                               double noise_var, double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    const int mn = static_cast<int>(ts.spread_t.rows());
    const Eigen::VectorXcd &psi = ch.freq_response();

    // Estimate is d + D~^{-1} (AF)^H H^{-1} v. Row norms of that noise matrix
    // equal column norms of H^{-H} (AF) D~^{-H}, one FFT triple per column.
    SinrReport rep;
    rep.p_sig = Eigen::VectorXd::Constant(mn, sym_power);
    rep.p_inr = Eigen::VectorXd::Zero(mn);
    rep.p_npp.resize(mn);

    Eigen::VectorXcd col(mn);
    for (int l = 0; l < mn; l++) {
        col = ts.spread_t.col(l);
        fft::forward_inplace(col.data(), mn);
        col.array() /= psi.array().conjugate();
        // The trailing unitary IDFT preserves the norm; skip it.
        rep.p_npp(l) = noise_var * col.squaredNorm() / static_cast<double>(mn);
    }
    rep.gamma = rep.p_sig.cwiseQuotient(rep.p_npp);
    return rep;
}

PrecodedEstimate bidft_two_stage_receive(const Eigen::VectorXcd &y, const ChannelRealization &ch,
                                         const ModulationMatrix &a, double noise_var,
                                         double sym_power)
{
    BidftTwoStage ts = make_bidft_two_stage(a);
    Eigen::VectorXcd y_fde = fde_equalize(y, ch);
    return PrecodedEstimate{ts.front * y_fde, bidft_two_stage_snr(ts, ch, noise_var, sym_power)};
}

DftEqualizer make_dft_equalizer(const ChannelRealization &ch, const ModulationMatrix &a,
                                const PrecoderSpec &p, double noise_var, double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    Eigen::MatrixXcd ha = ch.circulant() * a.entries;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(ha);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible())
        throw std::runtime_error("effective channel is singular; DFT-spread ZF impossible");

    DftEqualizer eq;
    eq.w = p.matrix.adjoint() * lu.inverse();

    const int mn = static_cast<int>(ha.rows());
    eq.snr.p_sig = Eigen::VectorXd::Constant(mn, sym_power);
    eq.snr.p_inr = Eigen::VectorXd::Zero(mn);
    eq.snr.p_npp = noise_var * eq.w.rowwise().squaredNorm();
    eq.snr.gamma = eq.snr.p_sig.cwiseQuotient(eq.snr.p_npp);
    return eq;
}

PrecodedEstimate dft_precoded_receive(const Eigen::VectorXcd &y, const ChannelRealization &ch,
                                      const ModulationMatrix &a, const PrecoderSpec &p,
                                      double noise_var, double sym_power)
{
    DftEqualizer eq = make_dft_equalizer(ch, a, p, noise_var, sym_power);
    return PrecodedEstimate{eq.w * y, std::move(eq.snr)};
}

PrecodedEstimate svd_precode_receive(const Eigen::VectorXcd &y, const SvdFactors &factors,
                                     double noise_var, double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    const int mn = static_cast<int>(factors.u.rows());

    PrecodedEstimate est;
    est.symbols = factors.u.adjoint() * y; // component l: s_l d_l + noise
    est.snr.p_sig = (sym_power * factors.singular_values.array().square()).matrix();
    est.snr.p_inr = Eigen::VectorXd::Zero(mn);
    est.snr.p_npp = Eigen::VectorXd::Constant(mn, noise_var);
    est.snr.gamma = est.snr.p_sig / noise_var;
    return est;
}

double precoded_ber_average(const std::vector<SinrReport> &reports, int mod_order)
{
    return ber_fsfc_average(reports, mod_order);
}

} // namespace gfdm
