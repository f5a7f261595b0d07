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

#include "gfdmlab/experiment.hpp"

#include <cerrno>
#include <climits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gfdm {

namespace {

std::string trim(const std::string &s)
{
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        parts.push_back(trim(item));
    if (!s.empty() && s.back() == sep)
        parts.push_back("");
    return parts;
}

[[noreturn]] void bad_value(const std::string &key, const std::string &value,
                            const std::string &want)
{
    throw std::invalid_argument("config key '" + key + "': cannot read '" + value + "' as " +
                                want);
}

double parse_double(const std::string &key, const std::string &value)
{
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        bad_value(key, value, "a number");
    return v;
}

long long parse_integer(const std::string &key, const std::string &value)
{
    errno = 0;
    char *end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        bad_value(key, value, "an integer");
    return v;
}

int parse_int(const std::string &key, const std::string &value)
{
    const long long v = parse_integer(key, value);
    if (v < INT_MIN || v > INT_MAX)
        bad_value(key, value, "an int");
    return static_cast<int>(v);
}

uint64_t parse_u64(const std::string &key, const std::string &value)
{
    errno = 0;
    char *end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE || value.find('-') == 0)
        bad_value(key, value, "an unsigned integer");
    return v;
}

bool parse_bool(const std::string &key, const std::string &value)
{
    if (value == "true" || value == "1")
        return true;
    if (value == "false" || value == "0")
        return false;
    bad_value(key, value, "true/false");
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_value(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10e", v);
    return buf;
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string &text)
{
    ExperimentConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        lineno++;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
        if (!seen.insert(key).second)
            throw std::invalid_argument("config key '" + key + "' given twice");

        if (key == "n_subcarriers") {
            cfg.waveform.n_subcarriers = parse_int(key, value);
        } else if (key == "n_timeslots") {
            cfg.waveform.n_timeslots = parse_int(key, value);
        } else if (key == "mod_order") {
            cfg.waveform.mod_order = parse_int(key, value);
        } else if (key == "rolloff") {
            cfg.waveform.rolloff = parse_double(key, value);
        } else if (key == "cp_length") {
            cfg.waveform.cp_length = parse_int(key, value);
        } else if (key == "spreading_factor") {
            cfg.waveform.spreading_factor = parse_int(key, value);
        } else if (key == "symbol_power") {
            cfg.waveform.symbol_power = parse_double(key, value);
        } else if (key == "channel") {
            if (value == "awgn")
                cfg.channel.kind = ChannelSetting::Kind::awgn;
            else if (value == "fsfc")
                cfg.channel.kind = ChannelSetting::Kind::fsfc;
            else
                bad_value(key, value, "awgn or fsfc");
        } else if (key == "channel_length") {
            cfg.channel.n_taps = parse_int(key, value);
        } else if (key == "pdp_divisor") {
            cfg.channel.pdp_divisor = parse_double(key, value);
        } else if (key == "cp_snr_loss") {
            cfg.channel.cp_ebn0_loss = parse_bool(key, value);
        } else if (key == "schemes") {
            cfg.schemes.clear();
            for (const auto &part : split(value, ','))
                cfg.schemes.push_back(parse_scheme(part));
            if (cfg.schemes.empty())
                bad_value(key, value, "a comma-separated scheme list");
        } else if (key == "ebn0_db") {
            cfg.ebn0_db.clear();
            for (const auto &part : split(value, ','))
                cfg.ebn0_db.push_back(parse_double(key, part));
            if (cfg.ebn0_db.empty())
                bad_value(key, value, "a comma-separated list of dB values");
        } else if (key == "n_channels") {
            cfg.n_channels = parse_int(key, value);
        } else if (key == "n_blocks") {
            cfg.n_blocks = parse_int(key, value);
        } else if (key == "dsic_passes") {
            cfg.dsic_passes = parse_int(key, value);
        } else if (key == "papr_blocks") {
            cfg.papr_blocks = parse_integer(key, value);
        } else if (key == "spread_symbol") {
            cfg.spread_symbol = parse_int(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_u64(key, value);
        } else if (key == "workers") {
            cfg.workers = parse_int(key, value);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

std::string render_experiment_config(const ExperimentConfig &cfg)
{
    std::ostringstream out;
    out << "n_subcarriers = " << cfg.waveform.n_subcarriers << "\n";
    out << "n_timeslots = " << cfg.waveform.n_timeslots << "\n";
    out << "mod_order = " << cfg.waveform.mod_order << "\n";
    out << "rolloff = " << format_double(cfg.waveform.rolloff) << "\n";
    out << "cp_length = " << cfg.waveform.cp_length << "\n";
    out << "spreading_factor = " << cfg.waveform.spreading_factor << "\n";
    out << "symbol_power = " << format_double(cfg.waveform.symbol_power) << "\n";
    out << "channel = " << (cfg.channel.kind == ChannelSetting::Kind::awgn ? "awgn" : "fsfc")
        << "\n";
    out << "channel_length = " << cfg.channel.n_taps << "\n";
    out << "pdp_divisor = " << format_double(cfg.channel.pdp_divisor) << "\n";
    out << "cp_snr_loss = " << (cfg.channel.cp_ebn0_loss ? "true" : "false") << "\n";
    out << "schemes = ";
    for (size_t i = 0; i < cfg.schemes.size(); i++)
        out << (i ? "," : "") << scheme_label(cfg.schemes[i]);
    out << "\n";
    out << "ebn0_db = ";
    for (size_t i = 0; i < cfg.ebn0_db.size(); i++)
        out << (i ? "," : "") << format_double(cfg.ebn0_db[i]);
    out << "\n";
    out << "n_channels = " << cfg.n_channels << "\n";
    out << "n_blocks = " << cfg.n_blocks << "\n";
    out << "dsic_passes = " << cfg.dsic_passes << "\n";
    out << "papr_blocks = " << cfg.papr_blocks << "\n";
    out << "spread_symbol = " << cfg.spread_symbol << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "workers = " << cfg.workers << "\n";
    return out.str();
}

std::string ber_csv(const std::vector<BerCurve> &curves)
{
    std::ostringstream out;
    out << "scheme,ebn0_db,ber_sim,ber_stderr,ber_analytic\n";
    for (const auto &c : curves)
        for (int i = 0; i < c.ebn0_db.size(); i++)
            out << c.scheme << ',' << format_double(c.ebn0_db(i)) << ','
                << format_value(c.simulated(i)) << ',' << format_value(c.std_error(i)) << ','
                << format_value(c.analytical(i)) << "\n";
    return out.str();
}

std::string papr_csv(const std::vector<PaprCcdf> &curves)
{
    std::ostringstream out;
    out << "scheme,papr_db,ccdf\n";
    for (const auto &c : curves)
        for (int i = 0; i < c.papr_grid_db.size(); i++)
            out << c.scheme << ',' << format_double(c.papr_grid_db(i)) << ','
                << format_value(c.ccdf(i)) << "\n";
    return out.str();
}

std::string sinr_csv(const std::vector<std::pair<std::string, Eigen::VectorXd>> &profiles,
                     double ebn0_db)
{
    std::ostringstream out;
    out << "scheme,symbol_index,ebn0_db,sinr\n";
    for (const auto &[scheme, gamma] : profiles)
        for (int l = 0; l < gamma.size(); l++)
            out << scheme << ',' << l << ',' << format_double(ebn0_db) << ','
                << format_value(gamma(l)) << "\n";
    return out.str();
}

std::string spread_csv(const std::vector<std::pair<std::string, Eigen::VectorXd>> &spectra)
{
    std::ostringstream out;
    out << "scheme,bin,magnitude\n";
    for (const auto &[scheme, mag] : spectra)
        for (int b = 0; b < mag.size(); b++)
            out << scheme << ',' << b << ',' << format_value(mag(b)) << "\n";
    return out.str();
}

std::string complexity_csv(const std::vector<ComplexityReport> &reports, int n_subcarriers,
                           int n_timeslots)
{
    std::ostringstream out;
    out << "scheme,n_subcarriers,n_timeslots,mult_count,formula,note\n";
    for (const auto &r : reports) {
        out << r.scheme << ',' << n_subcarriers << ',' << n_timeslots << ','
            << format_value(r.count) << ",\"";
        for (size_t i = 0; i < r.terms.size(); i++)
            out << (i ? " + " : "") << r.terms[i].first;
        out << "\",\"" << r.note << "\"\n";
    }
    return out.str();
}

void write_text_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace gfdm
