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
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wiretap/capacity.hpp"

namespace wiretap {

/// Monte Carlo campaign parameters. Noise is unit-variance, so the budget is
/// also the SNR. Field names match the JSON config keys.
struct ExperimentConfig {
    Index n_t = 5;
    Index n_r = 5;
    Index n_e = 4;
    double sigma_r2 = 1.0;
    double sigma_e2 = 1.0;
    double budget = 100.0;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::vector<double> rho_grid;
    std::vector<double> snr_db_grid;
    UniformMode uniform_mode = UniformMode::transmit;
    /// S2 directions used by the fraction campaign's uniform baseline.
    S2Support s2_support = S2Support::secure;

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);

/// One CSV row: a trial evaluated at one rho (fraction campaign) or one SNR
/// in dB (SNR campaign).
struct TrialRecord {
    std::size_t trial = 0;
    double parameter = 0.0;
    double uniform_rate = 0.0;
    double optimal_rate = 0.0;
    std::size_t q = 0;
    std::size_t dim_s1 = 0;
    std::size_t dim_s2 = 0;

    bool operator==(const TrialRecord&) const = default;
};

struct AggregateRow {
    double param = 0.0;
    double mean_uniform = 0.0;
    double se_uniform = 0.0;
    double mean_optimal = 0.0;
    double se_optimal = 0.0;
    std::size_t trials = 0;
};

struct CampaignResult {
    std::vector<TrialRecord> records;  ///< trial-major, parameter-minor
    std::vector<AggregateRow> aggregate;
    double mean_optimal = 0.0;
    std::size_t resampled = 0;  ///< degenerate draws replaced by a retry substream
    std::vector<std::string> warnings;

    /// Mean uniform-rate curve over rho (fraction campaign).
    RateCurve mean_uniform_curve() const;
};

/// Hr and He with i.i.d. CN(0, sigma^2) entries. The draw depends only on
/// (seed, stream): each matrix has its own mt19937_64 seeded through
/// std::seed_seq from (seed, stream, matrix id), entries are filled in
/// row-major order, and each complex entry consumes two outputs through the
/// Box-Muller transform.
ChannelPair sample_channel(const ExperimentConfig& cfg, std::uint64_t stream);

/// Draws the channel for `trial`, moving to stream trial + k * trials on the
/// k-th degenerate draw. Returns the factors and the number of retries.
struct TrialChannel {
    ChannelPair channel;
    GsvdFactors factors;
    std::size_t retries = 0;
};
TrialChannel draw_trial(const ExperimentConfig& cfg, std::size_t trial);

/// Optimal capacity against the uniform S1/S2 split over cfg.rho_grid.
CampaignResult run_fraction_experiment(const ExperimentConfig& cfg, unsigned threads = 1);

/// Optimal capacity against the uniform secure-set baseline over cfg.snr_db_grid.
CampaignResult run_snr_sweep(const ExperimentConfig& cfg, unsigned threads = 1);

/// Trial CSV with header trial,<param_name>,uniform_rate_bits,optimal_rate_bits,q,dim_s1,dim_s2.
void write_csv(const std::vector<TrialRecord>& records, const std::string& path, std::string_view param_name);
void write_aggregate_csv(const std::vector<AggregateRow>& rows, const std::string& path);

std::string format_trial_csv(const std::vector<TrialRecord>& records, std::string_view param_name);
std::string format_aggregate_csv(const std::vector<AggregateRow>& rows);
std::vector<TrialRecord> parse_trial_csv(const std::string& text);

/// "start:step:stop" (stop included within 1e-12) or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);

}  // namespace wiretap
