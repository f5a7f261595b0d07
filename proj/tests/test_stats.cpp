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

#include <cmath>
#include <vector>

#include "gfdmlab/rng.hpp"
#include "gfdmlab/stats.hpp"

using namespace gfdm;

TEST_CASE("moments on a hand-computed sample")
{
    const std::vector<double> x = {1.0, 2.0, 3.0, 6.0};
    CHECK(sample_mean(x) == doctest::Approx(3.0).epsilon(1e-15));
    // ML variance, divisor n: ((−2)^2 + (−1)^2 + 0 + 3^2) / 4.
    CHECK(sample_variance(x) == doctest::Approx(3.5).epsilon(1e-15));
}

TEST_CASE("normal CDF anchors")
{
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    // Classic two-sided 5% quantile.
    CHECK(normal_cdf(1.96) == doctest::Approx(0.97500210485178).epsilon(1e-10));
    CHECK(normal_cdf(-1.96) == doctest::Approx(1.0 - 0.97500210485178).epsilon(1e-8));
    // Location-scale reduction.
    CHECK(normal_cdf(3.0, 1.0, 2.0) == doctest::Approx(normal_cdf(1.0)).epsilon(1e-14));
    CHECK(normal_cdf(8.0) > 0.999999);
}

TEST_CASE("Kolmogorov tail probability anchor")
{
    // The 5% critical point of the scaled statistic sits near 1.36. With the
    // Stephens small-sample correction, D = 1.36/(sqrt(n)+0.12+0.11/sqrt(n)).
    const std::size_t n = 1000;
    const double root_n = std::sqrt(static_cast<double>(n));
    const double d = 1.36 / (root_n + 0.12 + 0.11 / root_n);
    CHECK(kolmogorov_p_value(d, n) == doctest::Approx(0.05).epsilon(0.05));

    // Monotone in the statistic, bounded by [0, 1].
    CHECK(kolmogorov_p_value(0.001, n) > 0.999);
    CHECK(kolmogorov_p_value(0.2, n) < 1e-6);
    CHECK(kolmogorov_p_value(0.0, n) == doctest::Approx(1.0));
}

TEST_CASE("test accepts normal data against the true parameters")
{
    RngStream rng(77, {1});
    std::vector<double> x(5000);
    for (double &v : x)
        v = 2.0 + 1.5 * rng.normal();
    const KsResult res = ks_test_normal(x, 2.0, 1.5);
    CHECK(res.p_value > 0.01);
    CHECK(res.statistic < 0.03);
}

TEST_CASE("test rejects data from the wrong location")
{
    RngStream rng(78, {1});
    std::vector<double> x(5000);
    for (double &v : x)
        v = 0.3 + rng.normal();
    const KsResult res = ks_test_normal(x, 0.0, 1.0);
    CHECK(res.p_value < 1e-6);
}

TEST_CASE("fitted test accepts normal and rejects exponential data")
{
    RngStream rng(79, {1});
    std::vector<double> gauss(5000), expo(5000);
    for (double &v : gauss)
        v = -1.0 + 0.4 * rng.normal();
    for (double &v : expo)
        v = -std::log(1.0 - rng.uniform());

    CHECK(ks_test_fitted_normal(gauss).p_value > 0.01);
    CHECK(ks_test_fitted_normal(expo).p_value < 1e-6);
}

TEST_CASE("statistic against the exact empirical-CDF supremum")
{
    // Four points placed by hand against the standard normal.
    std::vector<double> x = {-1.0, 0.0, 0.5, 2.0};
    const KsResult res = ks_test_normal(x, 0.0, 1.0);
    double sup = 0.0;
    for (std::size_t i = 0; i < x.size(); i++) {
        const double f = normal_cdf(x[i]);
        sup = std::max(sup, std::abs(f - static_cast<double>(i) / 4.0));
        sup = std::max(sup, std::abs(static_cast<double>(i + 1) / 4.0 - f));
    }
    CHECK(res.statistic == doctest::Approx(sup).epsilon(1e-12));
}
