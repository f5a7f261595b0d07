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

#include "gfdmlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gfdmlab/channel.hpp"
#include "gfdmlab/fft.hpp"
#include "gfdmlab/modulation.hpp"
#include "gfdmlab/precoders.hpp"
#include "gfdmlab/pulse.hpp"
#include "gfdmlab/qam.hpp"
#include "gfdmlab/receivers.hpp"
#include "gfdmlab/rng.hpp"

namespace gfdm {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

// Stream purposes; combined with trial/point/block indices they pin every
// random draw to a position in the experiment, independent of scheduling.
enum StreamTag : uint64_t {
    tag_channel = 1,
    tag_data = 2,
    tag_noise = 3,
    tag_papr = 4,
    tag_svd_pool = 5,
    tag_ks_channel = 6,
    tag_ks_block = 7,
};

void parallel_for(long n, int workers, const std::function<void(long)> &body)
{
    long w = std::clamp<long>(workers, 1, std::max<long>(1, n));
    if (w <= 1) {
        for (long i = 0; i < n; i++)
            body(i);
        return;
    }
    std::mutex fail_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(w));
    for (long k = 0; k < w; k++) {
        const long begin = n * k / w;
        const long end = n * (k + 1) / w;
        pool.emplace_back([&, begin, end] {
            try {
                for (long i = begin; i < end; i++)
                    body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

struct SchemeEntry {
    Scheme scheme;
    const char *label;
};

constexpr SchemeEntry scheme_table[] = {
    {Scheme::gfdm_mf, "GFDM-MF"},   {Scheme::gfdm_zf, "GFDM-ZF"},
    {Scheme::gfdm_mmse, "GFDM-MMSE"}, {Scheme::gfdm_dsic, "GFDM-DSIC"},
    {Scheme::bidft_jp, "BIDFT-JP"}, {Scheme::bidftn, "BIDFTN"},
    {Scheme::bidftm, "BIDFTM"},     {Scheme::lfdma_zf, "LFDMA-ZF"},
    {Scheme::ifdma_zf, "IFDMA-ZF"}, {Scheme::svd_prec, "SVD-Prec"},
    {Scheme::ofdm, "OFDM"},
};

enum class HarnessUse { ber, papr, spread };

// OFDM is run through the same machinery as the single-timeslot configuration:
// the prototype pulse degenerates to a constant and A becomes the unitary IDFT.
// Link-level runs keep the full MN-sample block so every scheme carries the
// same payload; envelope runs use one N-subcarrier symbol, the conventional
// OFDM transmitter.
GfdmConfig effective_config(const GfdmConfig &cfg, Scheme scheme, HarnessUse use)
{
    if (scheme != Scheme::ofdm)
        return cfg;
    GfdmConfig eff = cfg;
    eff.n_subcarriers = use == HarnessUse::papr ? cfg.n_subcarriers : cfg.frame_size();
    eff.n_timeslots = 1;
    eff.spreading_factor = 1;
    return eff;
}

struct SchemeContext {
    Scheme scheme = Scheme::gfdm_mf;
    GfdmConfig cfg; // effective geometry
    PulseShape pulse;
    ModulationMatrix a;
    QamMapper qam{4, 1.0}; // replaced in make_context
    PrecoderSpec precoder; // structured kinds; SVD is built per channel
    BidftTwoStage two_stage;
    Eigen::MatrixXcd dsic_gram;
    Eigen::FullPivLU<Eigen::MatrixXcd> a_lu;

    bool needs_ha() const
    {
        return scheme == Scheme::gfdm_mmse || scheme == Scheme::bidft_jp ||
               scheme == Scheme::lfdma_zf || scheme == Scheme::ifdma_zf ||
               scheme == Scheme::svd_prec;
    }
    bool uses_fde() const
    {
        return scheme == Scheme::gfdm_mf || scheme == Scheme::gfdm_zf ||
               scheme == Scheme::gfdm_dsic || scheme == Scheme::bidftn ||
               scheme == Scheme::bidftm || scheme == Scheme::ofdm;
    }
};

SchemeContext make_context(const GfdmConfig &cfg, Scheme scheme, HarnessUse use)
{
    SchemeContext ctx;
    ctx.scheme = scheme;
    ctx.cfg = effective_config(cfg, scheme, use);
    ctx.cfg.validate();
    ctx.pulse = make_rrc_pulse(ctx.cfg);
    const Ordering ordering =
        scheme == Scheme::bidftm ? Ordering::m_ordered : Ordering::n_ordered;
    ctx.a = build_modulation_matrix(ctx.cfg, ctx.pulse, ordering);
    ctx.qam = QamMapper(ctx.cfg.mod_order, ctx.cfg.symbol_power);

    switch (scheme) {
    case Scheme::bidft_jp:
    case Scheme::bidftn:
        ctx.precoder = make_precoder(PrecoderKind::bidft_n, ctx.cfg);
        break;
    case Scheme::bidftm:
        ctx.precoder = make_precoder(PrecoderKind::bidft_m, ctx.cfg);
        break;
    case Scheme::lfdma_zf:
        ctx.precoder = make_precoder(PrecoderKind::dft_lfdma, ctx.cfg);
        break;
    case Scheme::ifdma_zf:
        ctx.precoder = make_precoder(PrecoderKind::dft_ifdma, ctx.cfg);
        break;
    default:
        ctx.precoder = make_precoder(PrecoderKind::identity, ctx.cfg);
        break;
    }
    if (scheme == Scheme::bidftn || scheme == Scheme::bidftm)
        ctx.two_stage = make_bidft_two_stage(ctx.a);
    if (scheme == Scheme::gfdm_dsic)
        ctx.dsic_gram = ctx.a.entries.adjoint() * ctx.a.entries;
    if (scheme == Scheme::gfdm_zf) {
        ctx.a_lu.compute(ctx.a.entries);
        ctx.a_lu.setThreshold(1e-12);
        if (!ctx.a_lu.isInvertible())
            throw std::runtime_error("modulation matrix is singular; ZF receiver undefined");
    }
    return ctx;
}

// Per-channel-realization state shared by all points of one trial.
struct TrialChannel {
    ChannelRealization ch = identity_channel(1);
    Eigen::MatrixXcd ha;  // only when the scheme needs it
    SvdFactors factors;   // SVD precoding
    Eigen::MatrixXcd av;  // A V, the SVD transmit matrix
};

TrialChannel make_trial_channel(const SchemeContext &ctx, const ChannelSetting &chan,
                                ChannelRealization ch)
{
    TrialChannel tc;
    tc.ch = std::move(ch);
    if (ctx.needs_ha()) {
        if (chan.kind == ChannelSetting::Kind::awgn)
            tc.ha = ctx.a.entries;
        else
            tc.ha = tc.ch.circulant() * ctx.a.entries;
    }
    if (ctx.scheme == Scheme::svd_prec) {
        tc.factors = svd_factorize(tc.ha);
        tc.av = ctx.a.entries * tc.factors.v;
    }
    return tc;
}

// Operators depending on both the channel and the noise level.
struct PointWork {
    Eigen::MatrixXcd mmse_c;
    BidftJointEqualizer jp;
    DftEqualizer dft;
    SinrReport ts_snr;
    Eigen::VectorXd gamma; // analytic per-symbol SINR; empty when undefined
};

PointWork make_point_work(const SchemeContext &ctx, const TrialChannel &tc,
                          const ChannelSetting &chan, double noise_var)
{
    PointWork pw;
    const double pd = ctx.cfg.symbol_power;
    const int mn = ctx.cfg.frame_size();
    switch (ctx.scheme) {
    case Scheme::gfdm_mmse: {
        EqualizerMatrices eq = mmse_matrices(tc.ha, noise_var, pd);
        pw.mmse_c = eq.c;
        if (chan.kind == ChannelSetting::Kind::awgn)
            pw.gamma = Eigen::VectorXd::Constant(mn, mmse_sinr_awgn(ctx.a, noise_var, pd));
        else
            pw.gamma = mmse_sinr_fsfc(tc.ha, noise_var, pd).gamma;
        break;
    }
    case Scheme::bidft_jp:
        pw.jp = make_bidft_joint_equalizer(tc.ch, ctx.a, noise_var, pd);
        pw.gamma = pw.jp.snr.gamma;
        break;
    case Scheme::bidftn:
    case Scheme::bidftm:
        pw.ts_snr = bidft_two_stage_snr(ctx.two_stage, tc.ch, noise_var, pd);
        pw.gamma = pw.ts_snr.gamma;
        break;
    case Scheme::lfdma_zf:
    case Scheme::ifdma_zf:
        pw.dft = make_dft_equalizer(tc.ch, ctx.a, ctx.precoder, noise_var, pd);
        pw.gamma = pw.dft.snr.gamma;
        break;
    case Scheme::svd_prec:
        pw.gamma = (pd / noise_var) * tc.factors.singular_values.array().square().matrix();
        break;
    case Scheme::ofdm:
        pw.gamma = (pd / noise_var) * tc.ch.freq_response().cwiseAbs2();
        break;
    default:
        break; // MF, ZF, D-SIC carry no closed-form overlay
    }
    return pw;
}

Eigen::VectorXcd transmit_block(const SchemeContext &ctx, const TrialChannel &tc,
                                const Eigen::VectorXcd &d)
{
    if (ctx.scheme == Scheme::svd_prec)
        return tc.av * d;
    if (ctx.precoder.kind == PrecoderKind::identity)
        return modulate_fast(ctx.cfg, ctx.pulse, ctx.a.ordering, d);
    const Eigen::VectorXcd s = apply_precoder_fast(ctx.precoder, ctx.cfg, d);
    return modulate_fast(ctx.cfg, ctx.pulse, ctx.a.ordering, s);
}

Eigen::VectorXcd receive_block(const SchemeContext &ctx, const TrialChannel &tc,
                               const PointWork &pw, const Eigen::VectorXcd &y)
{
    switch (ctx.scheme) {
    case Scheme::gfdm_mf:
    case Scheme::ofdm:
        return mf_equalize(fde_equalize(y, tc.ch), ctx.a.entries);
    case Scheme::gfdm_zf:
        return ctx.a_lu.solve(fde_equalize(y, tc.ch));
    case Scheme::gfdm_mmse:
        return pw.mmse_c * y;
    case Scheme::gfdm_dsic:
        // passes are bound by the caller through ctx; see run_ber
        return Eigen::VectorXcd();
    case Scheme::bidft_jp:
        return pw.jp.w * y;
    case Scheme::bidftn:
    case Scheme::bidftm:
        return ctx.two_stage.front * fde_equalize(y, tc.ch);
    case Scheme::lfdma_zf:
    case Scheme::ifdma_zf:
        return pw.dft.w * y;
    case Scheme::svd_prec: {
        const Eigen::VectorXcd raw = tc.factors.u.adjoint() * y;
        const double floor = 1e-12 * tc.factors.singular_values(0);
        Eigen::VectorXcd est(raw.size());
        for (int l = 0; l < raw.size(); l++)
            est(l) = tc.factors.singular_values(l) <= floor
                         ? std::complex<double>(0.0, 0.0)
                         : raw(l) / tc.factors.singular_values(l);
        return est;
    }
    }
    return Eigen::VectorXcd();
}

void fill_bits(RngStream &rng, std::vector<uint8_t> &bits)
{
    for (auto &b : bits)
        b = static_cast<uint8_t>(rng.bits() & 1u);
}

} // namespace

const char *scheme_label(Scheme scheme)
{
    for (const auto &e : scheme_table)
        if (e.scheme == scheme)
            return e.label;
    throw std::invalid_argument("unknown scheme");
}

Scheme parse_scheme(const std::string &label)
{
    for (const auto &e : scheme_table)
        if (label == e.label)
            return e.scheme;
    throw std::invalid_argument("unknown scheme label: " + label);
}

const std::vector<Scheme> &all_schemes()
{
    static const std::vector<Scheme> all = [] {
        std::vector<Scheme> v;
        for (const auto &e : scheme_table)
            v.push_back(e.scheme);
        return v;
    }();
    return all;
}

bool scheme_has_analytic_ber(Scheme scheme)
{
    switch (scheme) {
    case Scheme::gfdm_mf:
    case Scheme::gfdm_zf:
    case Scheme::gfdm_dsic:
        return false;
    default:
        return true;
    }
}

BerCurve run_ber(const GfdmConfig &cfg, Scheme scheme, const ChannelSetting &channel,
                 const Eigen::VectorXd &ebn0_db, const BerOptions &opt)
{
    cfg.validate();
    if (ebn0_db.size() == 0)
        throw std::invalid_argument("run_ber requires at least one Eb/N0 point");
    if (opt.n_channels < 1 || opt.n_blocks < 1)
        throw std::invalid_argument("run_ber requires n_channels >= 1 and n_blocks >= 1");
    const bool fading = channel.kind == ChannelSetting::Kind::fsfc;
    if (fading && (channel.n_taps < 1 || channel.n_taps > cfg.cp_length))
        throw std::invalid_argument(
            "channel length must lie in [1, cp_length]; the prefix must cover the taps");

    const SchemeContext ctx = make_context(cfg, scheme, HarnessUse::ber);
    const int mn = ctx.cfg.frame_size();
    const int points = static_cast<int>(ebn0_db.size());
    const int trials = opt.n_channels;
    const long block_bits = ctx.cfg.bits_per_block();
    const bool cp_loss = fading && channel.cp_ebn0_loss;
    const int cp = fading ? ctx.cfg.cp_length : 0;

    Eigen::VectorXd noise_vars(points);
    for (int i = 0; i < points; i++)
        noise_vars(i) = ebn0_to_noise_variance(ctx.cfg, ebn0_db(i), cp_loss);

    const Eigen::VectorXd pdp =
        fading ? exponential_pdp(channel.n_taps, channel.pdp_divisor) : Eigen::VectorXd();

    // AWGN trials all see the identity channel; build its operators once.
    TrialChannel awgn_tc;
    std::vector<PointWork> awgn_pw;
    if (!fading) {
        awgn_tc = make_trial_channel(ctx, channel, identity_channel(mn));
        awgn_pw.reserve(points);
        for (int i = 0; i < points; i++)
            awgn_pw.push_back(make_point_work(ctx, awgn_tc, channel, noise_vars(i)));
    }

    Eigen::MatrixXd errors = Eigen::MatrixXd::Zero(trials, points);
    Eigen::MatrixXd analytic = Eigen::MatrixXd::Constant(trials, points, quiet_nan);
    const bool has_analytic = scheme_has_analytic_ber(scheme);

    parallel_for(trials, opt.workers, [&](long t) {
        TrialChannel local_tc;
        const TrialChannel *tc = &awgn_tc;
        if (fading) {
            RngStream ch_rng(opt.seed, {tag_channel, static_cast<uint64_t>(t)});
            local_tc = make_trial_channel(ctx, channel,
                                          sample_channel(channel.n_taps, pdp, ch_rng, mn));
            tc = &local_tc;
        }
        std::vector<uint8_t> bits(static_cast<size_t>(block_bits));
        for (int i = 0; i < points; i++) {
            const double nv = noise_vars(i);
            const PointWork local_pw =
                fading ? make_point_work(ctx, *tc, channel, nv) : PointWork{};
            const PointWork &pw = fading ? local_pw : awgn_pw[static_cast<size_t>(i)];
            RngStream data_rng(opt.seed,
                               {tag_data, static_cast<uint64_t>(t), static_cast<uint64_t>(i)});
            RngStream noise_rng(opt.seed,
                                {tag_noise, static_cast<uint64_t>(t), static_cast<uint64_t>(i)});
            long err = 0;
            for (int b = 0; b < opt.n_blocks; b++) {
                fill_bits(data_rng, bits);
                const Eigen::VectorXcd d = ctx.qam.map_block(bits);
                Eigen::VectorXcd y;
                if (fading) {
                    const Eigen::VectorXcd x = add_cp(transmit_block(ctx, *tc, d), cp);
                    const Eigen::VectorXcd rec =
                        transmit(x, tc->ch, NoiseModel{nv}, noise_rng, cp);
                    y = remove_cp(rec, cp, tc->ch.length());
                } else {
                    y = transmit_block(ctx, *tc, d);
                    for (int n2 = 0; n2 < mn; n2++)
                        y(n2) += noise_rng.cnormal(nv);
                }
                Eigen::VectorXcd est;
                if (ctx.scheme == Scheme::gfdm_dsic)
                    est = dsic_refine(mf_equalize(fde_equalize(y, tc->ch), ctx.a.entries),
                                      ctx.dsic_gram, ctx.cfg.n_subcarriers, ctx.cfg.n_timeslots,
                                      ctx.a.ordering, opt.dsic_passes, ctx.qam);
                else
                    est = receive_block(ctx, *tc, pw, y);
                const std::vector<uint8_t> got = ctx.qam.unmap_block(est);
                for (size_t j = 0; j < bits.size(); j++)
                    err += bits[j] != got[j];
            }
            errors(t, i) = static_cast<double>(err);
            if (has_analytic) {
                double acc = 0.0;
                for (int l = 0; l < mn; l++)
                    acc += ber_qam_awgn(pw.gamma(l), ctx.cfg.mod_order);
                analytic(t, i) = acc / mn;
            }
        }
    });

    BerCurve curve;
    curve.scheme = scheme_label(scheme);
    curve.ebn0_db = ebn0_db;
    curve.simulated.resize(points);
    curve.std_error.resize(points);
    curve.analytical.resize(points);
    const double total_bits = static_cast<double>(block_bits) * opt.n_blocks * trials;
    for (int i = 0; i < points; i++) {
        const double p = errors.col(i).sum() / total_bits;
        curve.simulated(i) = p;
        curve.std_error(i) = std::sqrt(std::max(0.0, p * (1.0 - p)) / total_bits);
        curve.analytical(i) = has_analytic ? analytic.col(i).mean() : quiet_nan;
    }
    return curve;
}

namespace {

// QPSK envelope of one block: two back-to-back symbols, no prefix.
double block_papr_db(const Eigen::VectorXcd &first, const Eigen::VectorXcd &second)
{
    double peak = 0.0;
    double acc = 0.0;
    for (const auto *half : {&first, &second}) {
        for (int n = 0; n < half->size(); n++) {
            const double p = std::norm((*half)(n));
            peak = std::max(peak, p);
            acc += p;
        }
    }
    const double mean = acc / static_cast<double>(first.size() + second.size());
    return 10.0 * std::log10(peak / mean);
}

PaprCcdf ccdf_from_samples(const std::string &label, std::vector<double> papr_db)
{
    std::sort(papr_db.begin(), papr_db.end());
    const double n = static_cast<double>(papr_db.size());
    const long lo = static_cast<long>(std::floor(papr_db.front() * 10.0)) - 1;
    const long hi = static_cast<long>(std::ceil(papr_db.back() * 10.0));
    PaprCcdf out;
    out.scheme = label;
    out.papr_grid_db.resize(hi - lo + 1);
    out.ccdf.resize(hi - lo + 1);
    for (long k = lo; k <= hi; k++) {
        const double g = static_cast<double>(k) / 10.0;
        const auto it = std::upper_bound(papr_db.begin(), papr_db.end(), g);
        out.papr_grid_db(k - lo) = g;
        out.ccdf(k - lo) = static_cast<double>(papr_db.end() - it) / n;
    }
    return out;
}

// One spreading chunk per time slot: the per-user load of the
// multiple-access mappings.
Eigen::VectorXcd single_user_symbols(const SchemeContext &ctx, RngStream &rng)
{
    const int n_dft = ctx.cfg.n_subcarriers / ctx.cfg.spreading_factor;
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(ctx.cfg.frame_size());
    for (int m = 0; m < ctx.cfg.n_timeslots; m++) {
        const Eigen::VectorXcd chunk = ctx.qam.random_symbols(rng, n_dft);
        d.segment(m * ctx.cfg.n_subcarriers, n_dft) = chunk;
    }
    return d;
}

} // namespace

PaprCcdf papr_ccdf(const GfdmConfig &cfg, Scheme scheme, const PaprOptions &opt)
{
    cfg.validate();
    if (opt.n_blocks < 1)
        throw std::invalid_argument("papr_ccdf requires n_blocks >= 1");
    const SchemeContext ctx = make_context(cfg, scheme, HarnessUse::papr);
    const int mn = ctx.cfg.frame_size();
    const bool per_user =
        scheme == Scheme::lfdma_zf || scheme == Scheme::ifdma_zf;
    std::vector<double> samples(static_cast<size_t>(opt.n_blocks));

    if (scheme == Scheme::svd_prec) {
        // Transmit matrices from a pool of channel draws; blocks cycle through
        // the pool and are batched into one product per group of columns.
        const int pool = std::max(1, opt.svd_channel_pool);
        const Eigen::VectorXd pdp = exponential_pdp(opt.svd_channel_taps, opt.svd_pdp_divisor);
        std::vector<Eigen::MatrixXcd> av(static_cast<size_t>(pool));
        for (int p = 0; p < pool; p++) {
            RngStream rng(opt.seed, {tag_svd_pool, static_cast<uint64_t>(p)});
            const ChannelRealization ch = sample_channel(opt.svd_channel_taps, pdp, rng, mn);
            const Eigen::MatrixXcd ha = ch.circulant() * ctx.a.entries;
            av[static_cast<size_t>(p)] = ctx.a.entries * svd_factorize(ha).v;
        }
        constexpr long batch_blocks = 128;
        std::vector<std::pair<int, long>> batches; // (pool member, first block)
        for (int p = 0; p < pool; p++)
            for (long first = p; first < opt.n_blocks; first += pool * batch_blocks)
                batches.emplace_back(p, first);
        parallel_for(static_cast<long>(batches.size()), opt.workers, [&](long bi) {
            const auto [p, first] = batches[static_cast<size_t>(bi)];
            std::vector<long> blocks;
            for (long blk = first; blk < opt.n_blocks && blocks.size() < batch_blocks;
                 blk += pool)
                blocks.push_back(blk);
            Eigen::MatrixXcd d(mn, 2 * static_cast<long>(blocks.size()));
            for (size_t j = 0; j < blocks.size(); j++) {
                RngStream rng(opt.seed, {tag_papr, static_cast<uint64_t>(blocks[j])});
                d.col(2 * static_cast<long>(j)) = ctx.qam.random_symbols(rng, mn);
                d.col(2 * static_cast<long>(j) + 1) = ctx.qam.random_symbols(rng, mn);
            }
            const Eigen::MatrixXcd x = av[static_cast<size_t>(p)] * d;
            for (size_t j = 0; j < blocks.size(); j++)
                samples[static_cast<size_t>(blocks[j])] = block_papr_db(
                    x.col(2 * static_cast<long>(j)), x.col(2 * static_cast<long>(j) + 1));
        });
    } else {
        parallel_for(opt.n_blocks, opt.workers, [&](long blk) {
            RngStream rng(opt.seed, {tag_papr, static_cast<uint64_t>(blk)});
            Eigen::VectorXcd halves[2];
            for (auto &half : halves) {
                const Eigen::VectorXcd d = per_user ? single_user_symbols(ctx, rng)
                                                    : ctx.qam.random_symbols(rng, mn);
                const Eigen::VectorXcd s =
                    ctx.precoder.kind == PrecoderKind::identity
                        ? d
                        : apply_precoder_fast(ctx.precoder, ctx.cfg, d);
                half = modulate_fast(ctx.cfg, ctx.pulse, ctx.a.ordering, s);
            }
            samples[static_cast<size_t>(blk)] = block_papr_db(halves[0], halves[1]);
        });
    }
    return ccdf_from_samples(scheme_label(scheme), std::move(samples));
}

double papr_at_ccdf(const PaprCcdf &curve, double prob)
{
    if (curve.ccdf.size() == 0)
        throw std::invalid_argument("empty CCDF curve");
    for (int i = 0; i < curve.ccdf.size(); i++)
        if (curve.ccdf(i) <= prob)
            return curve.papr_grid_db(i);
    return curve.papr_grid_db(curve.papr_grid_db.size() - 1);
}

Eigen::VectorXd frequency_spread(const GfdmConfig &cfg, Scheme scheme, int symbol_index)
{
    cfg.validate();
    const SchemeContext ctx = make_context(cfg, scheme, HarnessUse::spread);
    const int mn = ctx.cfg.frame_size();
    if (symbol_index < 0 || symbol_index >= mn)
        throw std::invalid_argument("symbol index out of range");
    Eigen::MatrixXcd p = ctx.precoder.matrix;
    if (ctx.scheme == Scheme::svd_prec) {
        // Transmit-side factorization over the flat channel, the
        // channel-independent view of the spreading.
        p = svd_factorize(ctx.a.entries).v;
    }
    const Eigen::VectorXcd wave = ctx.a.entries * p.col(symbol_index);
    Eigen::VectorXd spread = fft::forward(wave).cwiseAbs();
    const double peak = spread.maxCoeff();
    if (peak > 0.0)
        spread /= peak;
    return spread;
}

int occupied_bins(const Eigen::VectorXd &spectrum, double energy_fraction)
{
    if (spectrum.size() == 0)
        throw std::invalid_argument("empty spectrum");
    if (energy_fraction <= 0.0 || energy_fraction > 1.0)
        throw std::invalid_argument("energy fraction must lie in (0, 1]");
    std::vector<double> energy(static_cast<size_t>(spectrum.size()));
    for (int i = 0; i < spectrum.size(); i++)
        energy[static_cast<size_t>(i)] = spectrum(i) * spectrum(i);
    std::sort(energy.begin(), energy.end(), std::greater<>());
    double total = 0.0;
    for (double e : energy)
        total += e;
    double acc = 0.0;
    for (size_t i = 0; i < energy.size(); i++) {
        acc += energy[i];
        if (acc >= energy_fraction * total)
            return static_cast<int>(i) + 1;
    }
    return static_cast<int>(energy.size());
}

Eigen::VectorXd sinr_profile(const GfdmConfig &cfg, Scheme scheme, const ChannelSetting &channel,
                             double ebn0_db, int n_channels, uint64_t seed)
{
    if (!scheme_has_analytic_ber(scheme))
        throw std::invalid_argument("scheme has no analytic SINR report");
    if (n_channels < 1)
        throw std::invalid_argument("sinr_profile requires n_channels >= 1");
    const SchemeContext ctx = make_context(cfg, scheme, HarnessUse::ber);
    const int mn = ctx.cfg.frame_size();
    const bool fading = channel.kind == ChannelSetting::Kind::fsfc;
    if (fading && (channel.n_taps < 1 || channel.n_taps > cfg.cp_length))
        throw std::invalid_argument(
            "channel length must lie in [1, cp_length]; the prefix must cover the taps");
    const double nv = ebn0_to_noise_variance(ctx.cfg, ebn0_db, fading && channel.cp_ebn0_loss);
    if (!fading) {
        const TrialChannel tc = make_trial_channel(ctx, channel, identity_channel(mn));
        return make_point_work(ctx, tc, channel, nv).gamma;
    }
    const Eigen::VectorXd pdp = exponential_pdp(channel.n_taps, channel.pdp_divisor);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(mn);
    for (int t = 0; t < n_channels; t++) {
        RngStream ch_rng(seed, {tag_channel, static_cast<uint64_t>(t)});
        const TrialChannel tc = make_trial_channel(
            ctx, channel, sample_channel(channel.n_taps, pdp, ch_rng, mn));
        acc += make_point_work(ctx, tc, channel, nv).gamma;
    }
    return acc / static_cast<double>(n_channels);
}

std::vector<double> standardized_interference_samples(const GfdmConfig &cfg,
                                                      const ChannelSetting &channel,
                                                      double ebn0_db, int count, uint64_t seed)
{
    cfg.validate();
    if (count < 1)
        throw std::invalid_argument("sample count must be >= 1");
    const PulseShape pulse = make_rrc_pulse(cfg);
    const ModulationMatrix a = build_modulation_matrix(cfg, pulse, Ordering::n_ordered);
    const QamMapper qam(cfg.mod_order, cfg.symbol_power);
    const int mn = cfg.frame_size();
    const bool fading = channel.kind == ChannelSetting::Kind::fsfc;
    const double nv = ebn0_to_noise_variance(cfg, ebn0_db, fading && channel.cp_ebn0_loss);
    const double pd = cfg.symbol_power;
    const Eigen::VectorXd pdp =
        fading ? exponential_pdp(channel.n_taps, channel.pdp_divisor) : Eigen::VectorXd();

    constexpr int blocks_per_channel = 4;
    std::vector<double> out;
    out.reserve(2 * static_cast<size_t>(count));
    int collected = 0;
    for (uint64_t t = 0; collected < count; t++) {
        Eigen::MatrixXcd ha = a.entries;
        if (fading) {
            RngStream ch_rng(seed, {tag_ks_channel, t});
            ha = sample_channel(channel.n_taps, pdp, ch_rng, mn).circulant() * a.entries;
        }
        const EqualizerMatrices eq = mmse_matrices(ha, nv, pd);
        const SinrReport rep = mmse_sinr_fsfc(ha, nv, pd);
        RngStream rng(seed, {tag_ks_block, t});
        for (int b = 0; b < blocks_per_channel && collected < count; b++) {
            const Eigen::VectorXcd d = qam.random_symbols(rng, mn);
            Eigen::VectorXcd y = ha * d;
            for (int n = 0; n < mn; n++)
                y(n) += rng.cnormal(nv);
            const Eigen::VectorXcd est = eq.c * y;
            for (int l = 0; l < mn && collected < count; l++) {
                const double dev = std::sqrt((rep.p_inr(l) + rep.p_npp(l)) / 2.0);
                if (dev <= 0.0)
                    continue;
                const std::complex<double> sample = est(l) - eq.b(l, l) * d(l);
                out.push_back(sample.real() / dev);
                out.push_back(sample.imag() / dev);
                collected++;
            }
        }
    }
    return out;
}

namespace {

double log2d(int v) { return std::log2(static_cast<double>(v)); }

void push_term(ComplexityReport &rep, const std::string &name, double value)
{
    rep.terms.emplace_back(name, value);
    rep.count += value;
}

} // namespace

const std::vector<std::string> &complexity_schemes()
{
    static const std::vector<std::string> rows = {
        "OFDM-Tx",      "OFDM-Rx",      "GFDM-Tx",     "GFDM-ZF-Rx", "GFDM-MMSE-Rx",
        "GFDM-DSIC-Rx", "SVD-Prec-Tx",  "SVD-Prec-Rx", "BIDFT-Tx",   "BIDFT-JP-Rx",
        "BIDFTN-Rx",    "BIDFTM-Rx",    "DFT-Tx",      "DFT-Rx",
    };
    return rows;
}

ComplexityReport complexity_count(const std::string &scheme, int n_subcarriers, int n_timeslots,
                                  const ComplexityExtras &extras)
{
    if (n_subcarriers < 1 || n_timeslots < 1)
        throw std::invalid_argument("complexity_count requires positive N and M");
    const double n = n_subcarriers;
    const double m = n_timeslots;
    const double mn = n * m;
    ComplexityReport rep;
    rep.scheme = scheme;

    const auto fde_terms = [&] {
        push_term(rep, "(3MN/2) log2(MN)", 1.5 * mn * log2d(n_subcarriers * n_timeslots));
        push_term(rep, "2MN", 2.0 * mn);
    };
    const auto dft_overhead = [&] {
        if (extras.spreading_factor < 1 || n_subcarriers % extras.spreading_factor != 0)
            throw std::invalid_argument("spreading factor must divide the subcarrier count");
        const int n_dft = n_subcarriers / extras.spreading_factor;
        push_term(rep, "(MN/2) log2(N_dft)", 0.5 * mn * log2d(n_dft));
    };

    if (scheme == "OFDM-Tx") {
        push_term(rep, "MN log2(N)", mn * log2d(n_subcarriers));
    } else if (scheme == "OFDM-Rx") {
        push_term(rep, "2MN log2(N)", 2.0 * mn * log2d(n_subcarriers));
    } else if (scheme == "GFDM-Tx") {
        push_term(rep, "(MN)^2", mn * mn);
        if (n_subcarriers == 16 && n_timeslots == 127)
            rep.note = "scales as (MN)^2; quotes of 4.1e5 for this configuration "
                       "understate the formula value tenfold";
    } else if (scheme == "GFDM-ZF-Rx") {
        fde_terms();
        push_term(rep, "(MN)^2", mn * mn);
    } else if (scheme == "GFDM-MMSE-Rx") {
        push_term(rep, "(3MN/2) log2(MN)", 1.5 * mn * log2d(n_subcarriers * n_timeslots));
        push_term(rep, "(MN)^3/3", mn * mn * mn / 3.0);
        push_term(rep, "2(MN)^2", 2.0 * mn * mn);
        push_term(rep, "2MN/3", 2.0 * mn / 3.0);
    } else if (scheme == "GFDM-DSIC-Rx") {
        if (extras.dsic_passes < 0)
            throw std::invalid_argument("iteration count must be >= 0");
        fde_terms();
        push_term(rep, "2J(MN)^2", 2.0 * extras.dsic_passes * mn * mn);
    } else if (scheme == "SVD-Prec-Tx") {
        push_term(rep, "2(MN)^2", 2.0 * mn * mn);
    } else if (scheme == "SVD-Prec-Rx") {
        push_term(rep, "(MN)^2", mn * mn);
        if (!extras.known_svd)
            push_term(rep, "26(MN)^3", 26.0 * mn * mn * mn);
    } else if (scheme == "BIDFT-Tx") {
        push_term(rep, "(MN)^2", mn * mn);
    } else if (scheme == "BIDFT-JP-Rx") {
        push_term(rep, "(MN)^2 log2(N)", mn * mn * log2d(n_subcarriers));
        push_term(rep, "2(MN)^2", 2.0 * mn * mn);
        push_term(rep, "MN^2", m * n * n);
    } else if (scheme == "BIDFTN-Rx" || scheme == "BIDFTM-Rx") {
        fde_terms();
        push_term(rep, "NM^2", n * m * m);
        push_term(rep, "(MN)^2", mn * mn);
        if (scheme == "BIDFTN-Rx")
            push_term(rep, "MN^2", m * n * n);
        else
            push_term(rep, "NM^2", n * m * m);
    } else if (scheme == "DFT-Tx") {
        push_term(rep, "(MN)^2", mn * mn);
        dft_overhead();
    } else if (scheme == "DFT-Rx") {
        fde_terms();
        push_term(rep, "(MN)^2", mn * mn);
        dft_overhead();
    } else {
        throw std::invalid_argument("unknown complexity scheme: " + scheme);
    }
    return rep;
}

} // namespace gfdm
