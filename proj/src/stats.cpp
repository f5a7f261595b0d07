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

#include "gfdmlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfdm {

double sample_mean(const std::vector<double> &x)
{
    if (x.empty())
        throw std::invalid_argument("sample_mean requires at least one sample");
    double acc = 0.0;
    for (double v : x)
        acc += v;
    return acc / static_cast<double>(x.size());
}

double sample_variance(const std::vector<double> &x)
{
    if (x.size() < 2)
        throw std::invalid_argument("sample_variance requires at least two samples");
    const double mean = sample_mean(x);
    double acc = 0.0;
    for (double v : x)
        acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(x.size());
}

double normal_cdf(double x, double mean, double stddev)
{
    if (stddev <= 0.0)
        throw std::invalid_argument("normal_cdf requires stddev > 0");
    return 0.5 * std::erfc((mean - x) / (stddev * std::sqrt(2.0)));
}

double kolmogorov_p_value(double statistic, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("kolmogorov_p_value requires n > 0");
    if (statistic <= 0.0)
        return 1.0;
    const double root_n = std::sqrt(static_cast<double>(n));
    // Stephens' finite-sample correction of the asymptotic distribution.
    const double t = statistic * (root_n + 0.12 + 0.11 / root_n);
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; k++) {
        const double term = std::exp(-2.0 * k * k * t * t);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-18)
            break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test_normal(std::vector<double> samples, double mean, double stddev)
{
    if (samples.empty())
        throw std::invalid_argument("ks_test_normal requires at least one sample");
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); i++) {
        const double model = normal_cdf(samples[i], mean, stddev);
        const double above = (static_cast<double>(i) + 1.0) / n - model;
        const double below = model - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return {d, kolmogorov_p_value(d, samples.size())};
}

KsResult ks_test_fitted_normal(std::vector<double> samples)
{
    if (samples.size() < 2)
        throw std::invalid_argument("ks_test_fitted_normal requires at least two samples");
    const double mean = sample_mean(samples);
    const double var = sample_variance(samples);
    if (var <= 0.0)
        throw std::invalid_argument("ks_test_fitted_normal requires nonzero sample variance");
    return ks_test_normal(std::move(samples), mean, std::sqrt(var));
}

} // namespace gfdm
