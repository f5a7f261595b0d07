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

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace gfdm {

// Block-circulant matrices with circulant blocks are diagonalized by
// two levels of DFT structure. F = W (x) I applies a unitary IDFT across the
// block index while leaving the inside of each block alone; a block-circulant
// X then satisfies F^H X F = blkdiag(D^0 .. D^{n_blocks-1}).

struct BlockFourier {
    int block_size = 0;
    int n_blocks = 0;
    Eigen::MatrixXcd matrix; // unitary, dim = block_size * n_blocks
};

// Block (p, q) of F is w^{pq} / sqrt(n_blocks) * I with w = exp(j 2 pi / n_blocks).
BlockFourier block_fourier(int block_size, int n_blocks);

struct StructureCheck {
    bool ok = false;
    double max_deviation = 0.0;
};

// Wraparound block-shift identity: block(u+1, v+1 mod n) == block(u, v).
StructureCheck is_block_circulant(const Eigen::MatrixXcd &x, int block_size, double tol);

// Block circulant and every block itself circulant.
StructureCheck is_bccb(const Eigen::MatrixXcd &x, int block_size, double tol);

// Eigenvalues of a BCCB matrix from the 2-D DFT of its first block column;
// throws if the structure check fails. Eigenvalue s = r*block_size + v belongs
// to the (r, v) bin of the block/in-block frequency grid.
Eigen::VectorXcd bccb_eigenvalues(const Eigen::MatrixXcd &x, int block_size, double tol = 1e-8);

struct BlockDiagonal {
    std::vector<Eigen::MatrixXcd> blocks;
    double off_block_residual = 0.0; // off-block Frobenius energy / total energy

    int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().rows()); }
    int dim() const { return block_size() * static_cast<int>(blocks.size()); }
    Eigen::MatrixXcd dense() const;
};

// Diagonal blocks of F^H X F via the dense triple product (the oracle path).
// Throws when the off-block residual exceeds tol: the input was not block
// circulant for this block size.
BlockDiagonal block_diagonalize(const Eigen::MatrixXcd &x, const BlockFourier &f, double tol = 1e-9);

// Same result through one DFT across the first block column; valid for block-
// circulant inputs, which is checked first with an entrywise tolerance
// relative to the largest matrix entry.
BlockDiagonal block_diagonalize_fast(const Eigen::MatrixXcd &x, int block_size,
                                     double entry_tol = 1e-8);

class SingularBlockError : public std::runtime_error {
  public:
    SingularBlockError(int block_index, double smallest, double largest);
    int block_index() const { return index_; }

  private:
    int index_;
};

// Blockwise inverse. A block is singular when its smallest singular value is
// below 1e-12 times its largest; that raises SingularBlockError naming the block.
BlockDiagonal invert_block_diagonal(const BlockDiagonal &d);

} // namespace gfdm
