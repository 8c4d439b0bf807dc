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
#include "wiretap/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wiretap {

namespace {

// Rate of one subchannel as a function of its effective (radiated) power.
double channel_rate(const SubchannelGains& g, std::size_t i, double e)
{
    if (e <= 0.0) {
        return 0.0;
    }
    const double p = e / g.a[i];
    return std::log2(1.0 + p * g.c[i]) - std::log2(1.0 + p * g.d[i]);
}

struct Lattice {
    const std::vector<std::vector<double>>& table;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    double best_rate = -std::numeric_limits<double>::infinity();

    void walk(std::size_t axis, std::size_t remaining, double partial)
    {
        if (axis == current.size()) {
            if (partial > best_rate) {
                best_rate = partial;
                best = current;
            }
            return;
        }
        for (std::size_t k = 0; k <= remaining; ++k) {
            current[axis] = k;
            walk(axis + 1, remaining - k, partial + table[axis][k]);
        }
    }
};

double total_rate(const SubchannelGains& g, const std::vector<double>& e)
{
    double rate = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        rate += channel_rate(g, i, e[i]);
    }
    return rate;
}

// Re-splits e[i] + e[j] between the two coordinates. Index q is the slack.
void exchange(const SubchannelGains& g, std::vector<double>& e, std::size_t i, std::size_t j)
{
    const std::size_t q = g.size();
    const double total = e[i] + e[j];
    if (total <= 0.0) {
        return;
    }
    auto objective = [&](double t) {
        return (i < q ? channel_rate(g, i, t) : 0.0) + (j < q ? channel_rate(g, j, total - t) : 0.0);
    };

    constexpr double inv_phi = 0.6180339887498949;
    double lo = 0.0;
    double hi = total;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-14 * total; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        }
    }

    double best_t = e[i];
    double best_f = objective(e[i]);
    for (double t : {0.5 * (lo + hi), 0.0, total}) {
        if (const double f = objective(t); f > best_f) {
            best_f = f;
            best_t = t;
        }
    }
    e[i] = best_t;
    e[j] = total - best_t;
}

}  // namespace

OracleResult grid_maximize(const SubchannelGains& g, double budget, std::size_t resolution, int sweeps)
{
    const std::size_t q = g.size();
    if (q > kOracleMaxSubchannels) {
        throw std::invalid_argument("grid_maximize: at most 4 subchannels are supported");
    }
    if (resolution < 50) {
        throw std::invalid_argument("grid_maximize: resolution must be at least 50");
    }
    if (!(budget > 0.0)) {
        throw std::invalid_argument("grid_maximize: budget must be positive");
    }

    const double step = budget / static_cast<double>(resolution);
    std::vector<std::vector<double>> table(q, std::vector<double>(resolution + 1));
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t k = 0; k <= resolution; ++k) {
            table[i][k] = channel_rate(g, i, step * static_cast<double>(k));
        }
    }
    Lattice lattice{table, std::vector<std::size_t>(q, 0), std::vector<std::size_t>(q, 0)};
    lattice.walk(0, resolution, 0.0);

    // Coordinates 0..q-1 are effective powers; coordinate q is unused budget.
    std::vector<double> e(q + 1, 0.0);
    double used = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
        e[i] = step * static_cast<double>(lattice.best[i]);
        used += e[i];
    }
    e[q] = std::max(0.0, budget - used);

    double rate = total_rate(g, e);
    for (int s = 0; s < sweeps; ++s) {
        for (std::size_t i = 0; i <= q; ++i) {
            for (std::size_t j = i + 1; j <= q; ++j) {
                std::vector<double> candidate = e;
                exchange(g, candidate, i, j);
                if (const double r = total_rate(g, candidate); r > rate) {
                    rate = r;
                    e = std::move(candidate);
                }
            }
        }
    }

    OracleResult out;
    out.alloc.p.resize(q);
    for (std::size_t i = 0; i < q; ++i) {
        out.alloc.p[i] = e[i] / g.a[i];
    }
    out.alloc.effective_power = effective_power(g, out.alloc.p);
    out.alloc.mu = std::numeric_limits<double>::quiet_NaN();
    out.rate_bits = rate;
    return out;
}

KktReport kkt_check(const SubchannelGains& g, const PowerAllocation& alloc, double budget, double tol)
{
    KktReport report;
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        report.failures.push_back(what);
    };
    if (alloc.p.size() != g.size()) {
        fail(report.stationarity, "allocation length does not match gains");
        return report;
    }

    bool any_secure = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double c = g.c[i];
        const double d = g.d[i];
        const double p = alloc.p[i];
        std::ostringstream where;
        where << "subchannel " << i << ": ";
        if (p < 0.0) {
            fail(report.inactive_insecure, where.str() + "negative power");
            continue;
        }
        if (!is_secure(c, d)) {
            if (p > 0.0) {
                fail(report.inactive_insecure, where.str() + "power on an insecure subchannel");
            }
            continue;
        }
        any_secure = true;
        const double price = alloc.mu * g.a[i];
        if (p > 0.0) {
            if (!(price > 0.0) || !std::isfinite(price)) {
                fail(report.stationarity, where.str() + "multiplier is not a positive finite value");
                continue;
            }
            const double marginal = c / (1.0 + p * c) - d / (1.0 + p * d);
            const double residual = std::abs(marginal - price) / price;
            report.worst_stationarity = std::max(report.worst_stationarity, residual);
            if (residual > tol) {
                fail(report.stationarity, where.str() + "marginal gain differs from mu a");
            }
        } else if (!(price > 0.0) || (c - d) - price > tol * price) {
            fail(report.inactive_secure, where.str() + "inactive although c - d > mu a");
        }
    }

    const double used = effective_power(g, alloc.p);
    if (any_secure) {
        report.worst_budget = std::abs(used - budget) / budget;
        if (report.worst_budget > tol) {
            fail(report.budget, "effective power does not meet the budget");
        }
    } else if (used > 0.0) {
        report.worst_budget = used / budget;
        fail(report.budget, "power spent although no subchannel is secure");
    }
    return report;
}

}  // namespace wiretap
