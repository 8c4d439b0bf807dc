// SPDX-License-Identifier: Apache-2.0
//
// gsvd-wiretap: secrecy capacity of the Gaussian MIMO wiretap channel
// under GSVD beamforming
// Copyright (C) 2026 The gsvd-wiretap Authors
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
#include "wiretap/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace wiretap {

namespace {

enum MatrixId : std::uint32_t { kReceiver = 1, kEavesdropper = 2 };

ComplexMatrix rayleigh(Index rows, Index cols, double variance, std::uint64_t seed, std::uint64_t stream,
                       MatrixId id)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(id)};
    std::mt19937_64 engine(seq);
    constexpr double kUnit = 0x1.0p-53;
    const double scale = std::sqrt(variance / 2.0);

    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const double u1 = static_cast<double>((engine() >> 11) + 1) * kUnit;  // (0, 1]
            const double u2 = static_cast<double>(engine() >> 11) * kUnit;        // [0, 1)
            const double radius = std::sqrt(-2.0 * std::log(u1));
            const double angle = 2.0 * std::numbers::pi * u2;
            m(i, j) = Complex(scale * radius * std::cos(angle), scale * radius * std::sin(angle));
        }
    }
    return m;
}

// Runs body(t) for t in [0, count) on up to `threads` workers. Each index is
// handled exactly once and results are written by index, so output does not
// depend on scheduling.
template <typename Body>
void for_each_trial(std::size_t count, unsigned threads, Body&& body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t t = 0; t < count; ++t) {
            body(t);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < count; t = next++) {
                try {
                    body(t);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

std::pair<double, double> mean_and_se(const std::vector<double>& xs)
{
    const auto n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) {
        mean += x;
    }
    mean /= n;
    if (xs.size() < 2) {
        return {mean, 0.0};
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records, const std::vector<double>& params,
                                    std::size_t trials)
{
    std::vector<AggregateRow> rows;
    for (std::size_t k = 0; k < params.size(); ++k) {
        std::vector<double> uniform;
        std::vector<double> optimal;
        for (std::size_t t = 0; t < trials; ++t) {
            const TrialRecord& r = records[t * params.size() + k];
            uniform.push_back(r.uniform_rate);
            optimal.push_back(r.optimal_rate);
        }
        AggregateRow row;
        row.param = params[k];
        std::tie(row.mean_uniform, row.se_uniform) = mean_and_se(uniform);
        std::tie(row.mean_optimal, row.se_optimal) = mean_and_se(optimal);
        row.trials = trials;
        rows.push_back(row);
    }
    return rows;
}

std::string fmt12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

double parse_double(std::string_view s)
{
    // std::from_chars for double is unavailable in some standard libraries.
    std::string copy(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(copy, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + copy + "'");
    }
    if (used != copy.size()) {
        throw std::invalid_argument("not a number: '" + copy + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view s)
{
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw std::invalid_argument("not a count: '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

void check_increasing(const std::vector<double>& grid, const char* name)
{
    if (grid.empty()) {
        throw std::invalid_argument(std::string(name) + " must not be empty");
    }
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) {
            throw std::invalid_argument(std::string(name) + " must be strictly increasing");
        }
    }
}

}  // namespace

void ExperimentConfig::validate() const
{
    if (n_t < 1 || n_r < 1 || n_e < 1) {
        throw std::invalid_argument("antenna counts must be at least 1");
    }
    if (!(sigma_r2 >= 0.0) || !(sigma_e2 >= 0.0)) {
        throw std::invalid_argument("channel variances must be nonnegative");
    }
    if (!(budget > 0.0)) {
        throw std::invalid_argument("budget must be positive");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    for (double rho : rho_grid) {
        if (!(rho >= 0.0 && rho <= 1.0)) {
            throw std::invalid_argument("rho_grid values must lie in [0, 1]");
        }
    }
}

ExperimentConfig config_from_json(const std::string& text)
{
    const auto doc = nlohmann::json::parse(text);
    ExperimentConfig cfg;
    cfg.n_t = doc.value("n_t", cfg.n_t);
    cfg.n_r = doc.value("n_r", cfg.n_r);
    cfg.n_e = doc.value("n_e", cfg.n_e);
    cfg.sigma_r2 = doc.value("sigma_r2", cfg.sigma_r2);
    cfg.sigma_e2 = doc.value("sigma_e2", cfg.sigma_e2);
    cfg.budget = doc.value("budget", cfg.budget);
    cfg.trials = doc.value("trials", cfg.trials);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.rho_grid = doc.value("rho_grid", cfg.rho_grid);
    cfg.snr_db_grid = doc.value("snr_db_grid", cfg.snr_db_grid);
    if (doc.contains("uniform_mode")) {
        cfg.uniform_mode = parse_uniform_mode(doc.at("uniform_mode").get<std::string>());
    }
    if (doc.contains("s2_support")) {
        cfg.s2_support = parse_s2_support(doc.at("s2_support").get<std::string>());
    }
    static const char* known[] = {"n_t",      "n_r",         "n_e",          "sigma_r2",  "sigma_e2", "budget", "trials",
                                  "seed",     "rho_grid",    "snr_db_grid",  "uniform_mode", "s2_support"};
    for (const auto& item : doc.items()) {
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return item.key() == k; }) ==
            std::end(known)) {
            throw std::invalid_argument("unknown config field '" + item.key() + "'");
        }
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg)
{
    nlohmann::json doc = {{"n_t", cfg.n_t},
                          {"n_r", cfg.n_r},
                          {"n_e", cfg.n_e},
                          {"sigma_r2", cfg.sigma_r2},
                          {"sigma_e2", cfg.sigma_e2},
                          {"budget", cfg.budget},
                          {"trials", cfg.trials},
                          {"seed", cfg.seed},
                          {"rho_grid", cfg.rho_grid},
                          {"snr_db_grid", cfg.snr_db_grid},
                          {"uniform_mode", std::string(to_string(cfg.uniform_mode))},
                          {"s2_support", std::string(to_string(cfg.s2_support))}};
    return doc.dump(2);
}

RateCurve CampaignResult::mean_uniform_curve() const
{
    RateCurve curve;
    for (const AggregateRow& row : aggregate) {
        curve.rho.push_back(row.param);
        curve.rate_bits.push_back(row.mean_uniform);
    }
    return curve;
}

ChannelPair sample_channel(const ExperimentConfig& cfg, std::uint64_t stream)
{
    return ChannelPair(rayleigh(cfg.n_r, cfg.n_t, cfg.sigma_r2, cfg.seed, stream, kReceiver),
                       rayleigh(cfg.n_e, cfg.n_t, cfg.sigma_e2, cfg.seed, stream, kEavesdropper));
}

TrialChannel draw_trial(const ExperimentConfig& cfg, std::size_t trial)
{
    constexpr std::size_t kMaxRetries = 64;
    for (std::size_t k = 0; k <= kMaxRetries; ++k) {
        ChannelPair ch = sample_channel(cfg, trial + k * cfg.trials);
        try {
            GsvdFactors f = gsvd(ch);
            return TrialChannel{std::move(ch), std::move(f), k};
        } catch (const DegenerateChannel&) {
            if (k == kMaxRetries) {
                throw;
            }
        }
    }
    throw std::logic_error("draw_trial: unreachable");
}

CampaignResult run_fraction_experiment(const ExperimentConfig& cfg, unsigned threads)
{
    cfg.validate();
    check_increasing(cfg.rho_grid, "rho_grid");
    const std::size_t width = cfg.rho_grid.size();

    CampaignResult result;
    if (cfg.n_t <= cfg.n_e) {
        result.warnings.push_back("n_t <= n_e: the eavesdropper channel has no nullspace, S1 will be empty");
    }
    result.records.resize(cfg.trials * width);
    std::vector<double> optimal(cfg.trials);
    std::vector<std::size_t> retries(cfg.trials);

    for_each_trial(cfg.trials, threads, [&](std::size_t t) {
        const TrialChannel drawn = draw_trial(cfg, t);
        const SubchannelGains g = subchannel_gains(drawn.factors);
        const SubspacePartition part = classify_subspaces(g);
        const double best = secrecy_rate(g, solve_mu(g, cfg.budget));
        const RateCurve curve = fraction_sweep(g, part, cfg.budget, cfg.rho_grid, cfg.uniform_mode, cfg.s2_support);
        for (std::size_t k = 0; k < width; ++k) {
            result.records[t * width + k] =
                TrialRecord{t, cfg.rho_grid[k], curve.rate_bits[k], best, g.size(), part.s1.size(), part.s2.size()};
        }
        optimal[t] = best;
        retries[t] = drawn.retries;
    });

    result.aggregate = aggregate(result.records, cfg.rho_grid, cfg.trials);
    result.mean_optimal = mean_and_se(optimal).first;
    for (std::size_t r : retries) {
        result.resampled += r;
    }
    return result;
}

CampaignResult run_snr_sweep(const ExperimentConfig& cfg, unsigned threads)
{
    cfg.validate();
    check_increasing(cfg.snr_db_grid, "snr_db_grid");
    const std::size_t width = cfg.snr_db_grid.size();

    CampaignResult result;
    result.records.resize(cfg.trials * width);
    std::vector<double> optimal(cfg.trials * width);
    std::vector<std::size_t> retries(cfg.trials);

    for_each_trial(cfg.trials, threads, [&](std::size_t t) {
        const TrialChannel drawn = draw_trial(cfg, t);
        const SubchannelGains g = subchannel_gains(drawn.factors);
        const SubspacePartition part = classify_subspaces(g);
        for (std::size_t k = 0; k < width; ++k) {
            const double budget = std::pow(10.0, cfg.snr_db_grid[k] / 10.0);
            const double best = secrecy_rate(g, solve_mu(g, budget));
            const double uniform = achievable_secrecy_rate(g, uniform_secure_allocation(g, budget, cfg.uniform_mode));
            result.records[t * width + k] =
                TrialRecord{t, cfg.snr_db_grid[k], uniform, best, g.size(), part.s1.size(), part.s2.size()};
            optimal[t * width + k] = best;
        }
        retries[t] = drawn.retries;
    });

    result.aggregate = aggregate(result.records, cfg.snr_db_grid, cfg.trials);
    result.mean_optimal = mean_and_se(optimal).first;
    for (std::size_t r : retries) {
        result.resampled += r;
    }
    return result;
}

std::string format_trial_csv(const std::vector<TrialRecord>& records, std::string_view param_name)
{
    std::string out = "trial,";
    out += param_name;
    out += ",uniform_rate_bits,optimal_rate_bits,q,dim_s1,dim_s2\n";
    for (const TrialRecord& r : records) {
        out += std::to_string(r.trial) + ',' + fmt12(r.parameter) + ',' + fmt12(r.uniform_rate) + ',' +
               fmt12(r.optimal_rate) + ',' + std::to_string(r.q) + ',' + std::to_string(r.dim_s1) + ',' +
               std::to_string(r.dim_s2) + '\n';
    }
    return out;
}

std::string format_aggregate_csv(const std::vector<AggregateRow>& rows)
{
    std::string out = "param,mean_uniform,se_uniform,mean_optimal,se_optimal,trials\n";
    for (const AggregateRow& r : rows) {
        out += fmt12(r.param) + ',' + fmt12(r.mean_uniform) + ',' + fmt12(r.se_uniform) + ',' +
               fmt12(r.mean_optimal) + ',' + fmt12(r.se_optimal) + ',' + std::to_string(r.trials) + '\n';
    }
    return out;
}

void write_csv(const std::vector<TrialRecord>& records, const std::string& path, std::string_view param_name)
{
    write_text(path, format_trial_csv(records, param_name));
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows, const std::string& path)
{
    write_text(path, format_aggregate_csv(rows));
}

std::vector<TrialRecord> parse_trial_csv(const std::string& text)
{
    std::vector<TrialRecord> records;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("trial,", 0) != 0) {
        throw std::invalid_argument("trial csv: missing header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 7) {
            throw std::invalid_argument("trial csv: expected 7 fields in '" + line + "'");
        }
        records.push_back(TrialRecord{parse_count(fields[0]), parse_double(fields[1]), parse_double(fields[2]),
                                      parse_double(fields[3]), parse_count(fields[4]), parse_count(fields[5]),
                                      parse_count(fields[6])});
    }
    return records;
}

std::vector<double> parse_grid(std::string_view text)
{
    std::vector<double> grid;
    if (text.find(':') == std::string_view::npos) {
        for (std::string_view part : split(text, ',')) {
            grid.push_back(parse_double(part));
        }
        return grid;
    }
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw std::invalid_argument("range must be start:step:stop, got '" + std::string(text) + "'");
    }
    const double start = parse_double(parts[0]);
    const double step = parse_double(parts[1]);
    const double stop = parse_double(parts[2]);
    if (!(step > 0.0) || stop < start) {
        throw std::invalid_argument("range needs step > 0 and stop >= start: '" + std::string(text) + "'");
    }
    constexpr double kSlack = 1e-12;
    for (std::size_t k = 0;; ++k) {
        double v = start + static_cast<double>(k) * step;
        if (v > stop + kSlack) {
            break;
        }
        if (std::abs(v - stop) <= kSlack) {
            v = stop;
        }
        grid.push_back(v);
        if (grid.size() > 10'000'000) {
            throw std::invalid_argument("range has too many points");
        }
    }
    return grid;
}

}  // namespace wiretap
