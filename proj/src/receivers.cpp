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

#include "gfdmlab/receivers.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "gfdmlab/bccb.hpp"

namespace gfdm {

namespace {

struct EigenGram {
    Eigen::VectorXd lambda; // ascending, clamped to >= 0
    Eigen::MatrixXcd v;
};

EigenGram gram_eigensystem(const Eigen::MatrixXcd &ha)
{
    Eigen::MatrixXcd gram = ha.adjoint() * ha;
    gram = 0.5 * (gram + gram.adjoint().eval()); // kill rounding asymmetry
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition of the Gram matrix failed");
    Eigen::VectorXd lambda = es.eigenvalues();
    if (lambda.minCoeff() < -1e-10) {
        char msg[128];
        std::snprintf(msg, sizeof(msg), "Gram matrix is not PSD: eigenvalue %.3e", lambda.minCoeff());
        throw std::runtime_error(msg);
    }
    lambda = lambda.cwiseMax(0.0);
    return EigenGram{std::move(lambda), es.eigenvectors()};
}

double safe_ratio(double num, double den)
{
    if (den == 0.0)
        return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / den;
}

} // namespace

EqualizerMatrices mmse_matrices(const Eigen::MatrixXcd &ha, double noise_var, double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    EigenGram eg = gram_eigensystem(ha);
    const double rho = noise_var / sym_power;

    Eigen::VectorXd shrink(eg.lambda.size()), inv_reg(eg.lambda.size());
    for (int s = 0; s < eg.lambda.size(); s++) {
        double den = eg.lambda(s) + rho;
        shrink(s) = safe_ratio(eg.lambda(s), den);
        inv_reg(s) = den == 0.0 ? 0.0 : 1.0 / den;
    }

    EqualizerMatrices out;
    out.b = eg.v * shrink.asDiagonal() * eg.v.adjoint();
    out.c = eg.v * inv_reg.asDiagonal() * eg.v.adjoint() * ha.adjoint();
    out.eigenvalues = std::move(eg.lambda);
    out.eigenvectors = std::move(eg.v);
    return out;
}

Eigen::VectorXcd mf_equalize(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &ha)
{
    return ha.adjoint() * y;
}

Eigen::VectorXcd zf_equalize(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &ha)
{
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(ha);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ha);
        double smin = svd.singularValues()(svd.singularValues().size() - 1);
        char msg[128];
        std::snprintf(msg, sizeof(msg), "effective channel is singular: smallest singular value %.3e",
                      smin);
        throw std::runtime_error(msg);
    }
    return lu.solve(y);
}

Eigen::VectorXcd mmse_equalize(const Eigen::VectorXcd &y, const Eigen::MatrixXcd &ha,
                               double noise_var, double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    const double rho = noise_var / sym_power;
    Eigen::MatrixXcd reg = ha.adjoint() * ha;
    reg.diagonal().array() += rho;
    return Eigen::LDLT<Eigen::MatrixXcd>(reg).solve(ha.adjoint() * y);
}

Eigen::VectorXcd dsic_refine(const Eigen::VectorXcd &z_mf, const Eigen::MatrixXcd &gram,
                             int n_subcarriers, int n_timeslots, Ordering ordering, int passes,
                             const QamMapper &constellation)
{
    const int mn = n_subcarriers * n_timeslots;
    if (z_mf.size() != mn || gram.rows() != mn || gram.cols() != mn)
        throw std::invalid_argument("dimension mismatch in interference cancellation");
    if (passes < 0)
        throw std::invalid_argument("passes must be >= 0");

    auto col_of = [&](int k, int m) {
        return ordering == Ordering::n_ordered ? m * n_subcarriers + k : k * n_timeslots + m;
    };

    Eigen::VectorXcd soft = z_mf;
    Eigen::VectorXcd hard(mn);
    for (int l = 0; l < mn; l++)
        hard(l) = constellation.hard_decision(soft(l));

    for (int pass = 0; pass < passes; pass++) {
        for (int k = 0; k < n_subcarriers; k++) {
            int left = (k + n_subcarriers - 1) % n_subcarriers;
            int right = (k + 1) % n_subcarriers;
            for (int m = 0; m < n_timeslots; m++) {
                int l = col_of(k, m);
                std::complex<double> interference = 0.0;
                for (int nb : {left, right}) {
                    if (nb == k)
                        continue;
                    for (int mm = 0; mm < n_timeslots; mm++) {
                        int r = col_of(nb, mm);
                        interference += gram(l, r) * hard(r);
                    }
                }
                soft(l) = z_mf(l) - interference;
                hard(l) = constellation.hard_decision(soft(l));
            }
        }
    }
    return soft;
}

Eigen::VectorXcd dsic_equalize(const Eigen::VectorXcd &y_fde, const ModulationMatrix &a, int passes,
                               const QamMapper &constellation)
{
    Eigen::VectorXcd z = a.entries.adjoint() * y_fde;
    Eigen::MatrixXcd gram = a.entries.adjoint() * a.entries;
    return dsic_refine(z, gram, a.n_subcarriers, a.n_timeslots, a.ordering, passes, constellation);
}

SinrReport mmse_sinr_fsfc(const Eigen::MatrixXcd &ha, double noise_var, double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    EigenGram eg = gram_eigensystem(ha);
    const double rho = noise_var / sym_power;
    const int mn = static_cast<int>(eg.lambda.size());

    Eigen::VectorXd shrink(mn), shrink_sq(mn), noise_gain(mn);
    for (int s = 0; s < mn; s++) {
        double den = eg.lambda(s) + rho;
        double f = safe_ratio(eg.lambda(s), den);
        shrink(s) = f;
        shrink_sq(s) = f * f;
        noise_gain(s) = den == 0.0 ? 0.0 : f / den; // lambda/(rho+lambda)^2
    }

    // Diagonals of V diag(w) V^H are |V|^2 w; one real matvec per weight.
    Eigen::MatrixXd vsq = eg.v.cwiseAbs2();
    Eigen::VectorXd b_diag = vsq * shrink;
    Eigen::VectorXd b2_diag = vsq * shrink_sq;
    Eigen::VectorXd cc_diag = vsq * noise_gain;

    SinrReport rep;
    rep.p_sig = sym_power * b_diag.array().square();
    rep.p_inr = (sym_power * b2_diag - rep.p_sig).cwiseMax(0.0);
    rep.p_npp = noise_var * cc_diag;
    rep.gamma.resize(mn);
    for (int l = 0; l < mn; l++)
        rep.gamma(l) = safe_ratio(rep.p_sig(l), rep.p_inr(l) + rep.p_npp(l));
    return rep;
}

SinrReport mmse_sinr_fsfc(const ChannelRealization &ch, const Eigen::MatrixXcd &a, double noise_var,
                          double sym_power)
{
    return mmse_sinr_fsfc(ch.circulant() * a, noise_var, sym_power);
}

double mmse_sinr_awgn(const ModulationMatrix &a, double noise_var, double sym_power)
{
    if (noise_var < 0.0 || sym_power <= 0.0)
        throw std::invalid_argument("noise_var must be >= 0 and sym_power > 0");
    Eigen::MatrixXcd gram = a.entries.adjoint() * a.entries;
    gram = 0.5 * (gram + gram.adjoint().eval());

    const int block = a.ordering == Ordering::n_ordered ? a.n_subcarriers : a.n_timeslots;
    Eigen::VectorXd lambda = bccb_eigenvalues(gram, block).real(); // throws if not BCCB
    if (lambda.minCoeff() < -1e-10) {
        char msg[128];
        std::snprintf(msg, sizeof(msg), "Gram matrix is not PSD: eigenvalue %.3e", lambda.minCoeff());
        throw std::runtime_error(msg);
    }
    lambda = lambda.cwiseMax(0.0);

    const double rho = noise_var / sym_power;
    const double mn = static_cast<double>(lambda.size());
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (int s = 0; s < lambda.size(); s++) {
        double den = lambda(s) + rho;
        double f = safe_ratio(lambda(s), den);
        s1 += f;
        s2 += f * f;
        s3 += den == 0.0 ? 0.0 : f / den;
    }

    // BCCB Gram: every diagonal entry equals the trace average, so the
    // per-symbol powers collapse to eigenvalue sums.
    double p_sig = sym_power * (s1 / mn) * (s1 / mn);
    double p_sig_inr = sym_power * s2 / mn;
    double p_npp = noise_var * s3 / mn;
    return safe_ratio(p_sig, std::max(0.0, p_sig_inr - p_sig) + p_npp);
}

double ber_qam_awgn(double gamma, int mod_order)
{
    if (mod_order != 4 && mod_order != 16 && mod_order != 64)
        throw std::invalid_argument("mod_order must be 4, 16 or 64");
    if (gamma < 0.0)
        throw std::invalid_argument("gamma must be >= 0");
    const double root_m = std::sqrt(static_cast<double>(mod_order));
    const double bits = std::log2(static_cast<double>(mod_order));
    const double coef = 4.0 * (root_m - 1.0) / (root_m * bits);

    double sum = 0.0;
    for (int r = 0; r < static_cast<int>(root_m) / 2; r++) {
        // Square-QAM Gray BER: the Q argument carries the constellation
        // scaling 3/(M-1); dropping it would break QPSK down to Q(sqrt(g/3)).
        double arg = (2.0 * r + 1.0) * std::sqrt(3.0 * gamma / (mod_order - 1.0));
        sum += 0.5 * std::erfc(arg / std::sqrt(2.0));
    }
    return coef * sum;
}

double ber_fsfc_average(const std::vector<SinrReport> &reports, int mod_order)
{
    if (reports.empty())
        throw std::invalid_argument("at least one SINR report is required");
    double sum = 0.0;
    long count = 0;
    for (const auto &rep : reports) {
        for (int l = 0; l < rep.gamma.size(); l++)
            sum += ber_qam_awgn(rep.gamma(l), mod_order);
        count += rep.gamma.size();
    }
    return sum / static_cast<double>(count);
}

Eigen::VectorXcd interference_noise_samples(const ChannelRealization &ch, const Eigen::MatrixXcd &a,
                                            double noise_var, const QamMapper &constellation,
                                            RngStream &rng, int count)
{
    if (count < 1)
        throw std::invalid_argument("count must be >= 1");
    const Eigen::MatrixXcd ha = ch.circulant() * a;
    EqualizerMatrices eq = mmse_matrices(ha, noise_var, constellation.average_power());
    const int mn = static_cast<int>(ha.rows());

    Eigen::VectorXcd samples(count);
    int filled = 0;
    while (filled < count) {
        Eigen::VectorXcd d = constellation.random_symbols(rng, mn);
        Eigen::VectorXcd y = ha * d;
        if (noise_var > 0.0)
            for (int i = 0; i < mn; i++)
                y(i) += rng.cnormal(noise_var);
        Eigen::VectorXcd est = eq.c * y;
        for (int l = 0; l < mn && filled < count; l++, filled++)
            samples(filled) = est(l) - eq.b(l, l) * d(l);
    }
    return samples;
}

} // namespace gfdm
