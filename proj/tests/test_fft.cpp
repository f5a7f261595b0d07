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

#include <complex>

#include "gfdmlab/fft.hpp"
#include "gfdmlab/rng.hpp"

using namespace gfdm;

namespace {

// Direct quadratic DFT, the oracle for the library transform.
Eigen::VectorXcd naive_dft(const Eigen::VectorXcd &x, double sign)
{
    const int n = static_cast<int>(x.size());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    for (int k = 0; k < n; k++)
        for (int t = 0; t < n; t++)
            out(k) += x(t) * std::polar(1.0, sign * 2.0 * M_PI * t * k / n);
    return out;
}

Eigen::VectorXcd random_vector(int n, uint64_t seed)
{
    RngStream rng(seed, {1});
    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; i++)
        x(i) = rng.cnormal(1.0);
    return x;
}

} // namespace

TEST_CASE("forward transform matches the direct sum")
{
    for (int n : {1, 2, 5, 8, 12, 64}) {
        const Eigen::VectorXcd x = random_vector(n, 7 + n);
        const Eigen::VectorXcd got = fft::forward(x);
        const Eigen::VectorXcd want = naive_dft(x, -1.0);
        CHECK((got - want).norm() <= 1e-10 * (want.norm() + 1.0));
    }
}

TEST_CASE("inverse transform matches the direct sum")
{
    for (int n : {1, 3, 8, 20}) {
        const Eigen::VectorXcd x = random_vector(n, 100 + n);
        const Eigen::VectorXcd got = fft::inverse(x);
        const Eigen::VectorXcd want = naive_dft(x, +1.0);
        CHECK((got - want).norm() <= 1e-10 * (want.norm() + 1.0));
    }
}

TEST_CASE("inverse of forward scales by the length")
{
    const int n = 48;
    const Eigen::VectorXcd x = random_vector(n, 3);
    const Eigen::VectorXcd back = fft::inverse(fft::forward(x));
    CHECK((back - static_cast<double>(n) * x).norm() <= 1e-10 * n * x.norm());
}

TEST_CASE("impulse transforms to a flat spectrum")
{
    Eigen::VectorXcd delta = Eigen::VectorXcd::Zero(16);
    delta(0) = 1.0;
    const Eigen::VectorXcd spec = fft::forward(delta);
    for (int k = 0; k < 16; k++)
        CHECK(std::abs(spec(k) - 1.0) <= 1e-12);
}

TEST_CASE("energy is preserved up to the length factor")
{
    const int n = 33;
    const Eigen::VectorXcd x = random_vector(n, 9);
    const Eigen::VectorXcd spec = fft::forward(x);
    CHECK(spec.squaredNorm() == doctest::Approx(n * x.squaredNorm()).epsilon(1e-12));
}

TEST_CASE("in-place interface agrees with the vector interface")
{
    const int n = 24;
    const Eigen::VectorXcd x = random_vector(n, 21);
    Eigen::VectorXcd buf = x;
    fft::forward_inplace(buf.data(), n);
    CHECK((buf - fft::forward(x)).norm() <= 1e-12);
    buf = x;
    fft::inverse_inplace(buf.data(), n);
    CHECK((buf - fft::inverse(x)).norm() <= 1e-12);
}
