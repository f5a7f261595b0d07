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

#include "gfdmlab/fft.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace gfdm::fft {

namespace {

// fftw_execute_dft is thread safe, plan creation is not. Plans are created
// in-place with FFTW_UNALIGNED so a cached plan can be replayed on any buffer.
class PlanCache {
  public:
    fftw_plan get(int length, int sign)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(length, sign);
        auto it = plans_.find(key);
        if (it != plans_.end())
            return it->second;

        std::vector<std::complex<double>> scratch(length);
        auto *buf = reinterpret_cast<fftw_complex *>(scratch.data());
        fftw_plan p = fftw_plan_dft_1d(length, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (p == nullptr)
            throw std::runtime_error("fftw plan creation failed for length " + std::to_string(length));
        plans_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache &cache()
{
    static PlanCache c;
    return c;
}

void execute(std::complex<double> *data, int length, int sign)
{
    if (length <= 0)
        throw std::invalid_argument("fft length must be positive");
    fftw_plan p = cache().get(length, sign);
    auto *buf = reinterpret_cast<fftw_complex *>(data);
    fftw_execute_dft(p, buf, buf);
}

} // namespace

void forward_inplace(std::complex<double> *data, int length)
{
    execute(data, length, FFTW_FORWARD);
}

void inverse_inplace(std::complex<double> *data, int length)
{
    execute(data, length, FFTW_BACKWARD);
}

Eigen::VectorXcd forward(const Eigen::VectorXcd &x)
{
    Eigen::VectorXcd y = x;
    forward_inplace(y.data(), static_cast<int>(y.size()));
    return y;
}

Eigen::VectorXcd inverse(const Eigen::VectorXcd &x)
{
    Eigen::VectorXcd y = x;
    inverse_inplace(y.data(), static_cast<int>(y.size()));
    return y;
}

} // namespace gfdm::fft
