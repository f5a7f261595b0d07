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
//
// Command-line front end: runs the laboratory experiments described by a
// flat key = value configuration file and writes CSV tables.  No plotting
// here; the CSVs are the interface.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfdmlab/experiment.hpp"
#include "gfdmlab/metrics.hpp"
#include "gfdmlab/validate.hpp"

namespace {

namespace fs = std::filesystem;

struct GlobalArgs {
    std::string config_path;
    std::string out_dir = ".";
    uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    bool workers_set = false;
};

gfdm::ExperimentConfig load_config(const GlobalArgs &args)
{
    gfdm::ExperimentConfig cfg;
    if (!args.config_path.empty())
        cfg = gfdm::load_experiment_config(args.config_path);
    if (args.seed_set)
        cfg.seed = args.seed;
    if (args.workers_set)
        cfg.workers = args.workers;
    return cfg;
}

std::string output_path(const GlobalArgs &args, const char *name)
{
    fs::create_directories(args.out_dir);
    return (fs::path(args.out_dir) / name).string();
}

int cmd_validate(const GlobalArgs &args)
{
    const gfdm::ExperimentConfig cfg = load_config(args);
    const auto results = gfdm::run_validation(cfg, cfg.seed);
    for (const auto &r : results)
        std::printf("[%s] %-32s %s\n", r.passed ? " ok " : "FAIL", r.name.c_str(),
                    r.detail.c_str());
    const bool ok = gfdm::all_passed(results);
    std::printf("%zu checks, %s\n", results.size(), ok ? "all passed" : "FAILURES PRESENT");
    return ok ? 0 : 1;
}

int cmd_ber(const GlobalArgs &args)
{
    const gfdm::ExperimentConfig cfg = load_config(args);
    Eigen::VectorXd grid = Eigen::Map<const Eigen::VectorXd>(
        cfg.ebn0_db.data(), static_cast<long>(cfg.ebn0_db.size()));
    gfdm::BerOptions opt;
    opt.n_channels = cfg.n_channels;
    opt.n_blocks = cfg.n_blocks;
    opt.dsic_passes = cfg.dsic_passes;
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    std::vector<gfdm::BerCurve> curves;
    for (gfdm::Scheme scheme : cfg.schemes) {
        std::cerr << "ber: " << gfdm::scheme_label(scheme) << "\n";
        curves.push_back(gfdm::run_ber(cfg.waveform, scheme, cfg.channel, grid, opt));
    }
    const std::string path = output_path(args, "ber.csv");
    gfdm::write_text_file(path, gfdm::ber_csv(curves));
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_papr(const GlobalArgs &args)
{
    const gfdm::ExperimentConfig cfg = load_config(args);
    gfdm::PaprOptions opt;
    opt.n_blocks = cfg.papr_blocks;
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    std::vector<gfdm::PaprCcdf> curves;
    for (gfdm::Scheme scheme : cfg.schemes) {
        std::cerr << "papr: " << gfdm::scheme_label(scheme) << "\n";
        curves.push_back(gfdm::papr_ccdf(cfg.waveform, scheme, opt));
    }
    const std::string path = output_path(args, "papr.csv");
    gfdm::write_text_file(path, gfdm::papr_csv(curves));
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_sinr(const GlobalArgs &args)
{
    const gfdm::ExperimentConfig cfg = load_config(args);
    if (cfg.ebn0_db.empty())
        throw std::invalid_argument("sinr needs at least one ebn0_db value");
    const double ebn0 = cfg.ebn0_db.front();
    std::vector<std::pair<std::string, Eigen::VectorXd>> profiles;
    for (gfdm::Scheme scheme : cfg.schemes) {
        if (!gfdm::scheme_has_analytic_ber(scheme)) {
            std::cerr << "sinr: " << gfdm::scheme_label(scheme)
                      << " has no closed-form report, skipping\n";
            continue;
        }
        std::cerr << "sinr: " << gfdm::scheme_label(scheme) << "\n";
        profiles.emplace_back(gfdm::scheme_label(scheme),
                              gfdm::sinr_profile(cfg.waveform, scheme, cfg.channel, ebn0,
                                                 cfg.n_channels, cfg.seed));
    }
    const std::string path = output_path(args, "sinr.csv");
    gfdm::write_text_file(path, gfdm::sinr_csv(profiles, ebn0));
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_spread(const GlobalArgs &args)
{
    const gfdm::ExperimentConfig cfg = load_config(args);
    std::vector<std::pair<std::string, Eigen::VectorXd>> spectra;
    for (gfdm::Scheme scheme : cfg.schemes)
        spectra.emplace_back(gfdm::scheme_label(scheme),
                             gfdm::frequency_spread(cfg.waveform, scheme, cfg.spread_symbol));
    const std::string path = output_path(args, "spread.csv");
    gfdm::write_text_file(path, gfdm::spread_csv(spectra));
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_complexity(const GlobalArgs &args)
{
    const gfdm::ExperimentConfig cfg = load_config(args);
    gfdm::ComplexityExtras extras;
    extras.dsic_passes = cfg.dsic_passes;
    extras.spreading_factor = 4;
    struct Scenario {
        const char *title;
        int n, m;
    };
    const Scenario scenarios[] = {{"cellular profile", 128, 5}, {"broadcast profile", 16, 127}};
    std::string csv;
    for (const auto &sc : scenarios) {
        std::vector<gfdm::ComplexityReport> reports;
        std::printf("%s: N = %d, M = %d\n", sc.title, sc.n, sc.m);
        for (const auto &name : gfdm::complexity_schemes()) {
            gfdm::ComplexityReport rep = gfdm::complexity_count(name, sc.n, sc.m, extras);
            std::printf("  %-14s %12.4e%s%s\n", rep.scheme.c_str(), rep.count,
                        rep.note.empty() ? "" : "  note: ", rep.note.c_str());
            reports.push_back(std::move(rep));
        }
        std::string table = gfdm::complexity_csv(reports, sc.n, sc.m);
        if (!csv.empty())
            table.erase(0, table.find('\n') + 1); // one header for both profiles
        csv += table;
    }
    const std::string path = output_path(args, "complexity.csv");
    gfdm::write_text_file(path, csv);
    std::cout << "wrote " << path << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"gfdmlab: multicarrier waveform laboratory"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalArgs args;
    app.add_option("--config", args.config_path, "experiment configuration file");
    app.add_option("--out", args.out_dir, "output directory for CSV tables");
    auto *seed_opt = app.add_option("--seed", args.seed, "override the configured seed");
    auto *workers_opt = app.add_option("--workers", args.workers, "override the worker count");

    auto *validate = app.add_subcommand("validate", "run the structural self-checks");
    auto *ber = app.add_subcommand("ber", "bit-error-rate sweep over Eb/N0");
    auto *papr = app.add_subcommand("papr", "peak-to-average power CCDF");
    auto *sinr = app.add_subcommand("sinr", "per-symbol post-equalization SINR");
    auto *spread = app.add_subcommand("spread", "frequency spread of one data symbol");
    auto *complexity = app.add_subcommand("complexity", "multiplication counts per scheme");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    args.seed_set = seed_opt->count() > 0;
    args.workers_set = workers_opt->count() > 0;

    try {
        if (validate->parsed())
            return cmd_validate(args);
        if (ber->parsed())
            return cmd_ber(args);
        if (papr->parsed())
            return cmd_papr(args);
        if (sinr->parsed())
            return cmd_sinr(args);
        if (spread->parsed())
            return cmd_spread(args);
        if (complexity->parsed())
            return cmd_complexity(args);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
