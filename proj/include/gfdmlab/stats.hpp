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

#pragma once

#include <cstddef>
#include <vector>

namespace gfdm {

double sample_mean(const std::vector<double> &x);

// Maximum-likelihood variance, divisor n.
double sample_variance(const std::vector<double> &x);

double normal_cdf(double x, double mean = 0.0, double stddev = 1.0);

struct KsResult {
    double statistic; // sup distance between empirical and model CDF
    double p_value;   // asymptotic Kolmogorov tail probability
};

// Kolmogorov-Smirnov test against N(mean, stddev^2).
KsResult ks_test_normal(std::vector<double> samples, double mean, double stddev);

// Same test with mean and stddev fitted from the samples themselves.
KsResult ks_test_fitted_normal(std::vector<double> samples);

// Asymptotic tail probability of the Kolmogorov statistic for n samples.
double kolmogorov_p_value(double statistic, std::size_t n);

} // namespace gfdm
