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
#include "wiretap/capacity.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace wiretap {

namespace {

double log2_det_hpd(const ComplexMatrix& m)
{
    const Eigen::LLT<ComplexMatrix> llt(m);
    if (llt.info() != Eigen::Success) {
        throw FactorizationError("log-det: matrix is not positive definite");
    }
    const ComplexMatrix& l = llt.matrixLLT();
    double total = 0.0;
    for (Index i = 0; i < l.rows(); ++i) {
        total += std::log2(l(i, i).real());
    }
    return 2.0 * total;
}

// Spreads `share` of effective power over `dims`.
void spread(const SubchannelGains& g, std::span<const std::size_t> dims, double share, UniformMode mode, RealVector& p)
{
    if (dims.empty()) {
        return;
    }
    if (mode == UniformMode::transmit) {
        const double per_dim = share / static_cast<double>(dims.size());
        for (std::size_t i : dims) {
            p[i] = per_dim / g.a[i];
        }
        return;
    }
    double weight = 0.0;
    for (std::size_t i : dims) {
        weight += g.a[i];
    }
    for (std::size_t i : dims) {
        p[i] = share / weight;
    }
}

}  // namespace

UniformMode parse_uniform_mode(std::string_view text)
{
    if (text == "transmit") {
        return UniformMode::transmit;
    }
    if (text == "symbol") {
        return UniformMode::symbol;
    }
    throw std::invalid_argument("unknown uniform mode '" + std::string(text) + "' (expected transmit|symbol)");
}

std::string_view to_string(UniformMode mode)
{
    return mode == UniformMode::transmit ? "transmit" : "symbol";
}

S2Support parse_s2_support(std::string_view text)
{
    if (text == "all") {
        return S2Support::all;
    }
    if (text == "secure") {
        return S2Support::secure;
    }
    throw std::invalid_argument("unknown S2 support '" + std::string(text) + "' (expected all|secure)");
}

std::string_view to_string(S2Support support)
{
    return support == S2Support::all ? "all" : "secure";
}

double secrecy_rate(const SubchannelGains& g, const PowerAllocation& alloc)
{
    if (alloc.p.size() != g.size()) {
        throw std::invalid_argument("secrecy_rate: allocation length does not match gains");
    }
    double rate = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double p = alloc.p[i];
        if (p > 0.0) {
            rate += std::log2(1.0 + p * g.c[i]) - std::log2(1.0 + p * g.d[i]);
        }
    }
    return rate;
}

double achievable_secrecy_rate(const SubchannelGains& g, const PowerAllocation& alloc)
{
    return std::max(0.0, secrecy_rate(g, alloc));
}

double secrecy_rate_logdet(const ChannelPair& ch, const ComplexMatrix& q)
{
    const ComplexMatrix r = ComplexMatrix::Identity(ch.n_r(), ch.n_r()) + ch.hr() * q * ch.hr().adjoint();
    const ComplexMatrix e = ComplexMatrix::Identity(ch.n_e(), ch.n_e()) + ch.he() * q * ch.he().adjoint();
    return log2_det_hpd((r + r.adjoint()) * 0.5) - log2_det_hpd((e + e.adjoint()) * 0.5);
}

SubspacePartition classify_subspaces(const SubchannelGains& g, double eps_null)
{
    SubspacePartition part;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.c[i] < eps_null) {
            part.excluded.push_back(i);
        } else if (g.d[i] < eps_null) {
            part.s1.push_back(i);
        } else {
            part.s2.push_back(i);
        }
    }
    return part;
}

PowerAllocation uniform_allocation(const SubchannelGains& g, const SubspacePartition& part, double budget, double rho,
                                   UniformMode mode, S2Support support)
{
    if (part.s1.empty() && part.s2.empty()) {
        throw std::invalid_argument("uniform_allocation: no transmit directions outside Null(Hr)");
    }
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("uniform_allocation: rho must lie in [0, 1]");
    }
    std::vector<std::size_t> s2;
    for (std::size_t i : part.s2) {
        if (support == S2Support::all || is_secure(g.c[i], g.d[i])) {
            s2.push_back(i);
        }
    }
    if (part.s1.empty()) {
        rho = 1.0;
    } else if (s2.empty()) {
        rho = 0.0;
    }
    PowerAllocation out;
    out.p.assign(g.size(), 0.0);
    spread(g, part.s1, (1.0 - rho) * budget, mode, out.p);
    spread(g, s2, rho * budget, mode, out.p);
    out.effective_power = effective_power(g, out.p);
    out.mu = std::numeric_limits<double>::quiet_NaN();
    return out;
}

PowerAllocation uniform_secure_allocation(const SubchannelGains& g, double budget, UniformMode mode)
{
    std::vector<std::size_t> secure;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (is_secure(g.c[i], g.d[i])) {
            secure.push_back(i);
        }
    }
    PowerAllocation out;
    out.p.assign(g.size(), 0.0);
    spread(g, secure, budget, mode, out.p);
    out.effective_power = effective_power(g, out.p);
    out.mu = std::numeric_limits<double>::quiet_NaN();
    return out;
}

RateCurve fraction_sweep(const SubchannelGains& g, const SubspacePartition& part, double budget,
                         std::span<const double> grid, UniformMode mode, S2Support support)
{
    RateCurve curve;
    curve.rho.reserve(grid.size());
    curve.rate_bits.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (k > 0 && !(grid[k] > grid[k - 1])) {
            throw std::invalid_argument("fraction_sweep: grid must be strictly increasing");
        }
        curve.rho.push_back(grid[k]);
        curve.rate_bits.push_back(achievable_secrecy_rate(g, uniform_allocation(g, part, budget, grid[k], mode, support)));
    }
    return curve;
}

}  // namespace wiretap
