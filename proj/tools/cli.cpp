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
#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wiretap/experiments.hpp"
#include "wiretap/oracle.hpp"

namespace wiretap::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

constexpr double kOracleAgreementBits = 1e-3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_threads()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

// Options shared by the two sweep subcommands. Values start from the
// config file when one is given; explicit flags override it.
struct SweepOptions {
    std::string config_path;
    Index n_t = 0;
    Index n_r = 0;
    Index n_e = 0;
    double power = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double sigma_r2 = 1.0;
    double sigma_e2 = 1.0;
    std::string grid;
    std::string uniform_mode = "transmit";
    std::string s2_support = "secure";
    std::string out_dir;
    unsigned threads = default_threads();

    // Required unless --config is given.
    CLI::Option* n_t_opt = nullptr;
    CLI::Option* n_r_opt = nullptr;
    CLI::Option* n_e_opt = nullptr;
    CLI::Option* power_opt = nullptr;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    CLI::Option* grid_opt = nullptr;
    CLI::Option* mode_opt = nullptr;
    CLI::Option* support_opt = nullptr;
    CLI::Option* sigma_r2_opt = nullptr;
    CLI::Option* sigma_e2_opt = nullptr;
};

void add_sweep_options(CLI::App* sub, SweepOptions& o, bool fraction)
{
    sub->add_option("--config", o.config_path, "JSON experiment config")->check(CLI::ExistingFile);
    o.n_t_opt = sub->add_option("--nt", o.n_t, "transmit antennas")->check(CLI::PositiveNumber);
    o.n_r_opt = sub->add_option("--nr", o.n_r, "receiver antennas")->check(CLI::PositiveNumber);
    o.n_e_opt = sub->add_option("--ne", o.n_e, "eavesdropper antennas")->check(CLI::PositiveNumber);
    if (fraction) {
        o.power_opt = sub->add_option("--power", o.power, "total transmit power")->check(CLI::PositiveNumber);
    }
    o.trials_opt = sub->add_option("--trials", o.trials, "channel realizations")->check(CLI::PositiveNumber);
    o.seed_opt = sub->add_option("--seed", o.seed, "RNG seed");
    o.sigma_r2_opt = sub->add_option("--sigma-r2", o.sigma_r2, "receiver channel variance")->check(CLI::NonNegativeNumber);
    o.sigma_e2_opt =
        sub->add_option("--sigma-e2", o.sigma_e2, "eavesdropper channel variance")->check(CLI::NonNegativeNumber);
    if (fraction) {
        o.grid = "0:0.01:1";
        o.grid_opt = sub->add_option("--rho-grid", o.grid, "fraction of power on S2, start:step:stop");
    } else {
        o.grid = "0:5:30";
        o.grid_opt = sub->add_option("--snr-db", o.grid, "SNR grid in dB, start:step:stop");
    }
    o.mode_opt = sub->add_option("--uniform-mode", o.uniform_mode, "uniform baseline accounting")
                     ->check(CLI::IsMember({"transmit", "symbol"}));
    if (fraction) {
        o.support_opt = sub->add_option("--s2-support", o.s2_support, "S2 directions used by the uniform baseline")
                            ->check(CLI::IsMember({"all", "secure"}));
    }
    sub->add_option("--out", o.out_dir, "output directory")->required();
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
}

ExperimentConfig resolve_config(const SweepOptions& o, bool fraction)
{
    ExperimentConfig cfg;
    const bool from_file = !o.config_path.empty();
    if (from_file) {
        std::ifstream in(o.config_path);
        std::stringstream text;
        text << in.rdbuf();
        cfg = config_from_json(text.str());
    } else {
        for (const CLI::Option* opt : {o.n_t_opt, o.n_r_opt, o.n_e_opt, o.power_opt, o.trials_opt, o.seed_opt}) {
            if (opt != nullptr && opt->count() == 0) {
                throw UsageError(opt->get_name() + " is required (or pass --config)");
            }
        }
    }
    auto given = [](const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; };
    if (given(o.n_t_opt)) cfg.n_t = o.n_t;
    if (given(o.n_r_opt)) cfg.n_r = o.n_r;
    if (given(o.n_e_opt)) cfg.n_e = o.n_e;
    if (given(o.power_opt)) cfg.budget = o.power;
    if (given(o.trials_opt)) cfg.trials = o.trials;
    if (given(o.seed_opt)) cfg.seed = o.seed;
    if (!from_file || given(o.sigma_r2_opt)) cfg.sigma_r2 = o.sigma_r2;
    if (!from_file || given(o.sigma_e2_opt)) cfg.sigma_e2 = o.sigma_e2;
    if (!from_file || given(o.mode_opt)) cfg.uniform_mode = parse_uniform_mode(o.uniform_mode);
    if (o.support_opt != nullptr && (!from_file || given(o.support_opt))) {
        cfg.s2_support = parse_s2_support(o.s2_support);
    }

    auto& grid = fraction ? cfg.rho_grid : cfg.snr_db_grid;
    if (given(o.grid_opt) || grid.empty()) {
        try {
            grid = parse_grid(o.grid);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

void write_campaign(const CampaignResult& result, const std::string& dir, const std::string& prefix,
                    std::string_view param_name, std::ostream& err)
{
    std::filesystem::create_directories(dir);
    const auto trials_path = (std::filesystem::path(dir) / (prefix + "_trials.csv")).string();
    const auto aggregate_path = (std::filesystem::path(dir) / (prefix + "_aggregate.csv")).string();
    write_csv(result.records, trials_path, param_name);
    write_aggregate_csv(result.aggregate, aggregate_path);
    for (const std::string& w : result.warnings) {
        err << "warning: " << w << '\n';
    }
    if (result.resampled > 0) {
        err << "resampled " << result.resampled << " degenerate channel draw(s)\n";
    }
    err << "wrote " << trials_path << " and " << aggregate_path << '\n';
}

int cmd_gsvd_check(Index n_t, Index n_r, Index n_e, std::size_t trials, std::uint64_t seed, double tol,
                   std::ostream& out, std::ostream& err)
{
    ExperimentConfig cfg;
    cfg.n_t = n_t;
    cfg.n_r = n_r;
    cfg.n_e = n_e;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.validate();

    double worst = 0.0;
    std::size_t failed = 0;
    std::size_t resampled = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const TrialChannel drawn = draw_trial(cfg, t);
        resampled += drawn.retries;
        const FactorResiduals r = verify_factors(drawn.factors, drawn.channel);
        worst = std::max(worst, r.worst());
        if (!r.passes(tol)) {
            ++failed;
            err << "trial " << t << ": residual " << r.worst() << " exceeds " << tol << '\n';
        }
    }
    if (resampled > 0) {
        err << "resampled " << resampled << " degenerate channel draw(s)\n";
    }
    out << "trials " << trials << " failed " << failed << " worst_residual " << std::scientific
        << std::setprecision(3) << worst << '\n';
    return failed == 0 ? kOk : kCheckFailed;
}

int cmd_allocate(const std::string& hr_path, const std::string& he_path, double power, bool as_json,
                 std::ostream& out)
{
    const ChannelPair ch(load_matrix(hr_path), load_matrix(he_path));
    const GsvdFactors f = gsvd(ch);
    const SubchannelGains g = subchannel_gains(f);
    const PowerAllocation alloc = solve_mu(g, power);
    const double rate = secrecy_rate(g, alloc);

    if (as_json) {
        nlohmann::json doc = {{"c", g.c},
                              {"d", g.d},
                              {"a", g.a},
                              {"p", alloc.p},
                              {"mu", std::isfinite(alloc.mu) ? nlohmann::json(alloc.mu) : nlohmann::json(nullptr)},
                              {"effective_power", alloc.effective_power},
                              {"rate_bits", rate}};
        out << doc.dump() << '\n';
        return kOk;
    }
    out << std::setw(4) << "i" << std::setw(16) << "c_i" << std::setw(16) << "d_i" << std::setw(16) << "a_i"
        << std::setw(16) << "p_i" << '\n';
    out << std::setprecision(8);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out << std::setw(4) << i << std::setw(16) << g.c[i] << std::setw(16) << g.d[i] << std::setw(16) << g.a[i]
            << std::setw(16) << alloc.p[i] << '\n';
    }
    out << "mu " << alloc.mu << '\n';
    out << "effective_power " << alloc.effective_power << '\n';
    out << "secrecy_rate_bits " << rate << '\n';
    return kOk;
}

int cmd_oracle_verify(std::size_t q, std::size_t trials, double budget, std::uint64_t seed, std::size_t resolution,
                      std::ostream& out, std::ostream& err)
{
    if (q < 1 || q > kOracleMaxSubchannels) {
        throw UsageError("--q must be between 1 and 4");
    }
    double worst = 0.0;
    bool closed_form_lost = false;
    for (std::size_t t = 0; t < trials; ++t) {
        // Cycle the eavesdropper size so that instances with and without an
        // eavesdropper nullspace are both covered.
        ExperimentConfig cfg;
        cfg.n_t = static_cast<Index>(q);
        cfg.n_r = static_cast<Index>(q);
        const Index offsets[] = {-1, 0, 1};
        cfg.n_e = std::max<Index>(1, static_cast<Index>(q) + offsets[t % 3]);
        cfg.trials = trials;
        cfg.seed = seed;
        const TrialChannel drawn = draw_trial(cfg, t);
        const SubchannelGains g = subchannel_gains(drawn.factors);

        const double closed = secrecy_rate(g, solve_mu(g, budget));
        const OracleResult brute = grid_maximize(g, budget, resolution);
        const double deviation = std::abs(closed - brute.rate_bits);
        worst = std::max(worst, deviation);
        if (closed < brute.rate_bits - 1e-9) {
            closed_form_lost = true;
            err << "trial " << t << ": closed form " << closed << " below brute force " << brute.rate_bits << '\n';
        }
    }
    out << "trials " << trials << " max_deviation_bits " << std::scientific << std::setprecision(3) << worst << '\n';
    return (worst <= kOracleAgreementBits && !closed_form_lost) ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"GSVD beamforming secrecy capacity for the Gaussian MIMO wiretap channel", "wiretap"};
    app.require_subcommand(1);

    Index n_t = 0, n_r = 0, n_e = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    auto* check = app.add_subcommand("gsvd-check", "verify GSVD invariants on seeded random channel pairs");
    check->add_option("--nt", n_t)->required()->check(CLI::PositiveNumber);
    check->add_option("--nr", n_r)->required()->check(CLI::PositiveNumber);
    check->add_option("--ne", n_e)->required()->check(CLI::PositiveNumber);
    check->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
    check->add_option("--seed", seed)->required();
    check->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);

    std::string hr_path, he_path;
    double power = 0.0;
    bool as_json = false;
    auto* allocate = app.add_subcommand("allocate", "optimal power allocation for a given channel pair");
    allocate->add_option("--hr", hr_path, "receiver channel matrix (JSON)")->required()->check(CLI::ExistingFile);
    allocate->add_option("--he", he_path, "eavesdropper channel matrix (JSON)")->required()->check(CLI::ExistingFile);
    allocate->add_option("--power", power, "total transmit power")->required()->check(CLI::PositiveNumber);
    allocate->add_flag("--json", as_json, "print a JSON object instead of a table");

    SweepOptions fraction_opts;
    auto* fraction = app.add_subcommand("sweep-fraction", "uniform S1/S2 split against optimal allocation");
    add_sweep_options(fraction, fraction_opts, true);

    SweepOptions snr_opts;
    auto* snr = app.add_subcommand("sweep-snr", "optimal against uniform allocation over an SNR grid");
    add_sweep_options(snr, snr_opts, false);

    std::size_t q = 0;
    double budget = 0.0;
    std::size_t resolution = 200;
    auto* oracle = app.add_subcommand("oracle-verify", "closed-form allocation against brute-force search");
    oracle->add_option("--q", q)->required()->check(CLI::Range(1, 4));
    oracle->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
    oracle->add_option("--budget", budget)->required()->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed)->required();
    oracle->add_option("--resolution", resolution, "grid points per axis")->check(CLI::Range(50, 100000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (check->parsed()) {
            return cmd_gsvd_check(n_t, n_r, n_e, trials, seed, tol, out, err);
        }
        if (allocate->parsed()) {
            return cmd_allocate(hr_path, he_path, power, as_json, out);
        }
        if (fraction->parsed()) {
            const ExperimentConfig cfg = resolve_config(fraction_opts, true);
            const CampaignResult result = run_fraction_experiment(cfg, fraction_opts.threads);
            write_campaign(result, fraction_opts.out_dir, "fraction", "rho", err);
            const RateCurve curve = result.mean_uniform_curve();
            const auto peak = std::max_element(curve.rate_bits.begin(), curve.rate_bits.end()) - curve.rate_bits.begin();
            out << "mean_optimal_bits " << result.mean_optimal << '\n';
            out << "uniform_peak_rho " << curve.rho[static_cast<std::size_t>(peak)] << " uniform_peak_bits "
                << curve.rate_bits[static_cast<std::size_t>(peak)] << '\n';
            return kOk;
        }
        if (snr->parsed()) {
            const ExperimentConfig cfg = resolve_config(snr_opts, false);
            const CampaignResult result = run_snr_sweep(cfg, snr_opts.threads);
            write_campaign(result, snr_opts.out_dir, "snr", "snr_db", err);
            for (const AggregateRow& row : result.aggregate) {
                out << "snr_db " << row.param << " mean_optimal " << row.mean_optimal << " mean_uniform "
                    << row.mean_uniform << '\n';
            }
            return kOk;
        }
        if (oracle->parsed()) {
            return cmd_oracle_verify(q, trials, budget, seed, resolution, out, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace wiretap::cli
