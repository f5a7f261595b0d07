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

#include "gfdmlab/bccb.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "gfdmlab/fft.hpp"

namespace gfdm {

namespace {

void require_divisible(const Eigen::MatrixXcd &x, int block_size)
{
    if (x.rows() != x.cols())
        throw std::invalid_argument("matrix must be square");
    if (block_size < 1 || x.rows() % block_size != 0)
        throw std::invalid_argument("block_size must divide the matrix dimension");
}

// Largest absolute violation of entry(u,v) == entry((u+1) mod n, (v+1) mod n)
// applied at the requested granularity (stride = block row/col step).
double circulant_deviation(const Eigen::MatrixXcd &x, int block_size)
{
    const int n_blocks = static_cast<int>(x.rows()) / block_size;
    double dev = 0.0;
    for (int u = 0; u < n_blocks; u++) {
        int us = ((u + 1) % n_blocks) * block_size;
        for (int v = 0; v < n_blocks; v++) {
            int vs = ((v + 1) % n_blocks) * block_size;
            double d = (x.block(us, vs, block_size, block_size) -
                        x.block(u * block_size, v * block_size, block_size, block_size))
                           .cwiseAbs()
                           .maxCoeff();
            dev = std::max(dev, d);
        }
    }
    return dev;
}

} // namespace

BlockFourier block_fourier(int block_size, int n_blocks)
{
    if (block_size < 1 || n_blocks < 1)
        throw std::invalid_argument("block_size and n_blocks must be positive");
    const int dim = block_size * n_blocks;
    BlockFourier f{block_size, n_blocks, Eigen::MatrixXcd::Zero(dim, dim)};
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_blocks));
    for (int p = 0; p < n_blocks; p++)
        for (int q = 0; q < n_blocks; q++) {
            std::complex<double> w =
                scale * std::polar(1.0, 2.0 * M_PI * static_cast<double>(p) * q / n_blocks);
            for (int i = 0; i < block_size; i++)
                f.matrix(p * block_size + i, q * block_size + i) = w;
        }
    return f;
}

StructureCheck is_block_circulant(const Eigen::MatrixXcd &x, int block_size, double tol)
{
    require_divisible(x, block_size);
    double dev = circulant_deviation(x, block_size);
    return StructureCheck{dev <= tol, dev};
}

StructureCheck is_bccb(const Eigen::MatrixXcd &x, int block_size, double tol)
{
    require_divisible(x, block_size);
    double dev = circulant_deviation(x, block_size);
    // Every block must itself be circulant: elementwise shift identity.
    const int n_blocks = static_cast<int>(x.rows()) / block_size;
    for (int u = 0; u < n_blocks; u++)
        for (int v = 0; v < n_blocks; v++) {
            Eigen::MatrixXcd blk = x.block(u * block_size, v * block_size, block_size, block_size);
            dev = std::max(dev, circulant_deviation(blk, 1));
        }
    return StructureCheck{dev <= tol, dev};
}

Eigen::VectorXcd bccb_eigenvalues(const Eigen::MatrixXcd &x, int block_size, double tol)
{
    StructureCheck check = is_bccb(x, block_size, tol);
    if (!check.ok) {
        char msg[160];
        std::snprintf(msg, sizeof(msg), "matrix is not BCCB for block size %d (deviation %.3e)",
                      block_size, check.max_deviation);
        throw std::invalid_argument(msg);
    }

    const int n_blocks = static_cast<int>(x.rows()) / block_size;

    // 2-D DFT of the first block column T[p][i] = X(p*b+i, 0):
    // lambda(r, v) = sum_p sum_i T[p][i] w_blocks^{-pr} w_inner^{-iv}.
    Eigen::MatrixXcd t(n_blocks, block_size);
    for (int p = 0; p < n_blocks; p++)
        for (int i = 0; i < block_size; i++)
            t(p, i) = x(p * block_size + i, 0);

    Eigen::VectorXcd col(n_blocks), row(block_size);
    for (int i = 0; i < block_size; i++) {
        col = t.col(i);
        fft::forward_inplace(col.data(), n_blocks);
        t.col(i) = col;
    }
    Eigen::VectorXcd lambda(x.rows());
    for (int r = 0; r < n_blocks; r++) {
        row = t.row(r);
        fft::forward_inplace(row.data(), block_size);
        lambda.segment(r * block_size, block_size) = row;
    }
    return lambda;
}

Eigen::MatrixXcd BlockDiagonal::dense() const
{
    const int b = block_size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim(), dim());
    for (size_t r = 0; r < blocks.size(); r++)
        out.block(static_cast<int>(r) * b, static_cast<int>(r) * b, b, b) = blocks[r];
    return out;
}

BlockDiagonal block_diagonalize(const Eigen::MatrixXcd &x, const BlockFourier &f, double tol)
{
    if (x.rows() != f.matrix.rows())
        throw std::invalid_argument("matrix and block-Fourier dimensions differ");
    require_divisible(x, f.block_size);

    Eigen::MatrixXcd d = f.matrix.adjoint() * x * f.matrix;

    BlockDiagonal out;
    out.blocks.reserve(f.n_blocks);
    double block_energy = 0.0;
    for (int r = 0; r < f.n_blocks; r++) {
        out.blocks.push_back(d.block(r * f.block_size, r * f.block_size, f.block_size, f.block_size));
        block_energy += out.blocks.back().squaredNorm();
    }
    double total = d.squaredNorm();
    out.off_block_residual = total > 0.0 ? std::max(0.0, (total - block_energy) / total) : 0.0;
    if (out.off_block_residual > tol) {
        char msg[160];
        std::snprintf(msg, sizeof(msg), "input is not block circulant: off-block energy fraction %.3e",
                      out.off_block_residual);
        throw std::invalid_argument(msg);
    }
    return out;
}

BlockDiagonal block_diagonalize_fast(const Eigen::MatrixXcd &x, int block_size, double entry_tol)
{
    require_divisible(x, block_size);
    const int n_blocks = static_cast<int>(x.rows()) / block_size;

    // The fast path only serves block-circulant inputs; the shift check costs
    // one pass over the matrix, far below the dense triple product.
    double scale = x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
    StructureCheck check = is_block_circulant(x, block_size, entry_tol * (1.0 + scale));
    if (!check.ok) {
        char msg[160];
        std::snprintf(msg, sizeof(msg), "input is not block circulant: shift deviation %.3e",
                      check.max_deviation);
        throw std::invalid_argument(msg);
    }

    // D^r = sum_p C_p exp(-j 2 pi p r / n_blocks) with C_p = first block column.
    std::vector<Eigen::MatrixXcd> first_col(n_blocks);
    for (int p = 0; p < n_blocks; p++)
        first_col[p] = x.block(p * block_size, 0, block_size, block_size);

    BlockDiagonal out;
    out.blocks.assign(n_blocks, Eigen::MatrixXcd(block_size, block_size));
    Eigen::VectorXcd line(n_blocks);
    for (int i = 0; i < block_size; i++)
        for (int j = 0; j < block_size; j++) {
            for (int p = 0; p < n_blocks; p++)
                line(p) = first_col[p](i, j);
            fft::forward_inplace(line.data(), n_blocks);
            for (int r = 0; r < n_blocks; r++)
                out.blocks[r](i, j) = line(r);
        }

    double block_energy = 0.0;
    for (const auto &blk : out.blocks)
        block_energy += blk.squaredNorm();
    double total = x.squaredNorm(); // F is unitary, energy is preserved
    out.off_block_residual = total > 0.0 ? std::max(0.0, (total - block_energy) / total) : 0.0;
    return out;
}

namespace {

std::string singular_block_message(int block_index, double smallest, double largest)
{
    char msg[160];
    std::snprintf(msg, sizeof(msg), "block %d is singular: smallest singular value %.3e vs largest %.3e",
                  block_index, smallest, largest);
    return msg;
}

} // namespace

SingularBlockError::SingularBlockError(int block_index, double smallest, double largest)
    : std::runtime_error(singular_block_message(block_index, smallest, largest)), index_(block_index)
{
}

BlockDiagonal invert_block_diagonal(const BlockDiagonal &d)
{
    BlockDiagonal out;
    out.blocks.reserve(d.blocks.size());
    for (size_t r = 0; r < d.blocks.size(); r++) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d.blocks[r],
                                               Eigen::ComputeThinU | Eigen::ComputeThinV);
        double smax = svd.singularValues()(0);
        double smin = svd.singularValues()(svd.singularValues().size() - 1);
        if (smin < 1e-12 * smax || smax == 0.0)
            throw SingularBlockError(static_cast<int>(r), smin, smax);
        out.blocks.push_back(svd.matrixV() *
                             svd.singularValues().cwiseInverse().asDiagonal() *
                             svd.matrixU().adjoint());
    }
    return out;
}

} // namespace gfdm
