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

#include <complex>

#include <Eigen/Dense>

namespace gfdm::fft {

// Unnormalized transforms of arbitrary length:
//   forward: X[k] = sum_n x[n] exp(-j 2 pi n k / L)
//   inverse: x[n] = sum_k X[k] exp(+j 2 pi n k / L)
// so inverse(forward(x)) == L * x. Callers apply their own scaling.
// Thread safe; plans are cached per (length, direction).

void forward_inplace(std::complex<double> *data, int length);
void inverse_inplace(std::complex<double> *data, int length);

Eigen::VectorXcd forward(const Eigen::VectorXcd &x);
Eigen::VectorXcd inverse(const Eigen::VectorXcd &x);

} // namespace gfdm::fft
