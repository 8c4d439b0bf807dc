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
#include "wiretap/allocation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wiretap {

double f_of_x(double x, double c, double d, double a, double mu)
{
    return (c / (1.0 + x * c) - d / (1.0 + x * d)) / std::numbers::ln2 - mu * a;
}

double largest_root(double c, double d, double a, double mu)
{
    if (!(c > d)) {
        throw std::domain_error("largest_root: requires c > d");
    }
    if (!(mu > 0.0) || !(a > 0.0)) {
        throw std::domain_error("largest_root: requires mu > 0 and a > 0");
    }
    if (std::abs(c + d - 1.0) > 1e-10) {
        throw std::domain_error("largest_root: requires c + d = 1");
    }
    const double ratio = (c - d) / (mu * a);
    const double cd = c * d;
    // 1 - 4cd = (1 - 2d)^2 when c + d = 1.
    const double radicand = (1.0 - 2.0 * d) * (1.0 - 2.0 * d) + 4.0 * cd * ratio;
    return 2.0 * (ratio - 1.0) / (1.0 + std::sqrt(radicand));
}

double effective_power(const SubchannelGains& g, std::span<const double> p)
{
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        total += g.a[i] * p[i];
    }
    return total;
}

PowerAllocation power_for_mu(const SubchannelGains& g, double mu)
{
    PowerAllocation out;
    out.mu = mu;
    out.p.assign(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (is_secure(g.c[i], g.d[i]) && std::isfinite(mu)) {
            out.p[i] = std::max(0.0, largest_root(g.c[i], g.d[i], g.a[i], mu));
        }
    }
    out.effective_power = effective_power(g, out.p);
    return out;
}

PowerAllocation solve_mu(const SubchannelGains& g, double budget, double rel_tol)
{
    if (!(budget > 0.0)) {
        throw std::invalid_argument("solve_mu: budget must be positive");
    }
    double mu_hi = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (is_secure(g.c[i], g.d[i])) {
            mu_hi = std::max(mu_hi, (g.c[i] - g.d[i]) / g.a[i]);
        }
    }
    if (mu_hi <= 0.0) {
        return power_for_mu(g, std::numeric_limits<double>::infinity());
    }

    const double target_tol = rel_tol * budget;
    double mu_lo = mu_hi;
    int halvings = 0;
    PowerAllocation lo = power_for_mu(g, mu_lo);
    while (lo.effective_power < budget) {
        if (++halvings > kMaxBisection) {
            throw std::runtime_error("solve_mu: could not bracket the multiplier");
        }
        mu_lo *= 0.5;
        lo = power_for_mu(g, mu_lo);
    }
    if (std::abs(lo.effective_power - budget) <= target_tol) {
        return lo;
    }

    // Effective power is nonincreasing in mu; bisect geometrically. Once the
    // bracket holds no representable midpoint the closest point is returned:
    // for tiny budgets the power is a step function of mu at this scale.
    PowerAllocation best = lo;
    for (int it = 0; it < kMaxBisection; ++it) {
        const double mid = std::sqrt(mu_lo * mu_hi);
        if (!(mid > mu_lo && mid < mu_hi)) {
            return best;
        }
        PowerAllocation trial = power_for_mu(g, mid);
        if (std::abs(trial.effective_power - budget) < std::abs(best.effective_power - budget)) {
            best = trial;
        }
        if (std::abs(trial.effective_power - budget) <= target_tol) {
            return trial;
        }
        if (trial.effective_power > budget) {
            mu_lo = mid;
        } else {
            mu_hi = mid;
        }
    }
    throw std::runtime_error("solve_mu: bisection did not meet the power tolerance within the iteration cap");
}

ComplexMatrix input_covariance(const GsvdFactors& f, const PowerAllocation& alloc)
{
    if (static_cast<Index>(alloc.p.size()) != f.A.cols()) {
        throw std::invalid_argument("input_covariance: allocation length does not match A");
    }
    const Eigen::Map<const Eigen::VectorXd> p(alloc.p.data(), static_cast<Index>(alloc.p.size()));
    const ComplexMatrix scaled = f.A * p.cast<Complex>().asDiagonal();
    ComplexMatrix q = scaled * f.A.adjoint();
    // Symmetrize away the roundoff skew.
    return (q + q.adjoint()) * 0.5;
}

}  // namespace wiretap
