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
#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "wiretap/capacity.hpp"
#include "wiretap/oracle.hpp"

using namespace wiretap;

namespace {

// Shapes whose stacked pencil has q in {2, 3}.
ChannelPair small_pair(std::uint64_t seed)
{
    static const Index shapes[][3] = {{2, 2, 1}, {2, 2, 2}, {3, 3, 2}, {3, 3, 3}, {3, 2, 4}, {2, 3, 1}};
    const auto& s = shapes[seed % 6];
    return fixtures::random_pair(s[0], s[1], s[2], 4000 + seed);
}

}  // namespace

TEST(GridMaximize, SingleSecureChannelTakesEverything)
{
    const SubchannelGains g = fixtures::single_gain(0.8, 0.2, 2.0);
    const OracleResult r = grid_maximize(g, 10.0, 200);
    EXPECT_NEAR(r.alloc.p[0], 5.0, 1e-9);
    EXPECT_NEAR(r.rate_bits, std::log2(1.0 + 5.0 * 0.8) - std::log2(1.0 + 5.0 * 0.2), 1e-12);
}

TEST(GridMaximize, NothingSecure)
{
    const SubchannelGains g{{0.3, 0.5}, {0.7, 0.5}, {1.0, 1.0}};
    const OracleResult r = grid_maximize(g, 10.0, 100);
    EXPECT_EQ(r.rate_bits, 0.0);
    EXPECT_EQ(r.alloc.effective_power, 0.0);
}

TEST(GridMaximize, TiesResolveToSmallestLatticePoint)
{
    // Two equal channels: the even split is the unique lattice maximum.
    const SubchannelGains g{{0.8, 0.8}, {0.2, 0.2}, {1.0, 1.0}};
    const OracleResult r = grid_maximize(g, 10.0, 50, 0);
    EXPECT_NEAR(r.alloc.p[0], 5.0, 1e-12);
    EXPECT_NEAR(r.alloc.p[1], 5.0, 1e-12);
}

TEST(GridMaximize, MatchesClosedFormOnSeededInstance)
{
    const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(3, 3, 3, 11)));
    ASSERT_EQ(g.size(), 3u);
    const OracleResult r = grid_maximize(g, 10.0, 200);
    EXPECT_NEAR(r.rate_bits, secrecy_rate(g, solve_mu(g, 10.0)), 1e-4);
}

TEST(GridMaximize, Refusals)
{
    const SubchannelGains five{{0.6, 0.6, 0.6, 0.6, 0.6}, {0.4, 0.4, 0.4, 0.4, 0.4}, {1, 1, 1, 1, 1}};
    EXPECT_THROW(grid_maximize(five, 1.0, 100), std::invalid_argument);
    const SubchannelGains one = fixtures::single_gain(0.6, 0.4, 1.0);
    EXPECT_THROW(grid_maximize(one, 1.0, 49), std::invalid_argument);
    EXPECT_THROW(grid_maximize(one, 0.0, 100), std::invalid_argument);
}

TEST(GridMaximize, ClosedFormNeverLoses)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SubchannelGains g = subchannel_gains(gsvd(small_pair(seed)));
        ASSERT_GE(g.size(), 2u);
        ASSERT_LE(g.size(), 3u);
        for (double budget : {1.0, 10.0, 100.0}) {
            const double closed = secrecy_rate(g, solve_mu(g, budget));
            const OracleResult grid = grid_maximize(g, budget, 200);
            EXPECT_NEAR(closed, grid.rate_bits, 1e-3) << "seed " << seed << " budget " << budget;
            EXPECT_GE(closed, grid.rate_bits - 1e-9) << "seed " << seed << " budget " << budget;
            EXPECT_LE(grid.alloc.effective_power, budget * (1.0 + 1e-12));
        }
    }
}

TEST(GridMaximize, RateAgreesWithLogDet)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ChannelPair ch = small_pair(seed);
        const GsvdFactors f = gsvd(ch);
        const OracleResult grid = grid_maximize(subchannel_gains(f), 10.0, 100);
        EXPECT_NEAR(grid.rate_bits, secrecy_rate_logdet(ch, input_covariance(f, grid.alloc)), 1e-8);
    }
}

TEST(KktCheck, PassesOnClosedForm)
{
    static const Index shapes[][3] = {{5, 5, 4}, {4, 4, 4}, {3, 2, 4}, {6, 3, 2}};
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto& s = shapes[seed % 4];
        const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(s[0], s[1], s[2], seed)));
        for (double budget : {0.5, 10.0, 1000.0}) {
            const KktReport report = kkt_check(g, solve_mu(g, budget), budget, 1e-6);
            EXPECT_TRUE(report.passed()) << "seed " << seed << ": "
                                         << (report.failures.empty() ? "" : report.failures.front());
        }
    }
}

TEST(KktCheck, DetectsMovedPower)
{
    // Low budget leaves the weak secure channel inactive.
    const SubchannelGains g{{0.9, 0.55}, {0.1, 0.45}, {1.0, 1.0}};
    PowerAllocation alloc = solve_mu(g, 0.5);
    ASSERT_GT(alloc.p[0], 0.0);
    ASSERT_EQ(alloc.p[1], 0.0);
    ASSERT_TRUE(kkt_check(g, alloc, 0.5, 1e-6).passed());
    alloc.p[1] = 0.25;
    alloc.p[0] -= 0.25;
    const KktReport report = kkt_check(g, alloc, 0.5, 1e-6);
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(report.stationarity);
}

TEST(KktCheck, DetectsPowerOnInsecureChannel)
{
    const SubchannelGains g{{0.9, 0.3}, {0.1, 0.7}, {1.0, 1.0}};
    PowerAllocation alloc = solve_mu(g, 2.0);
    alloc.p[0] -= 0.5;
    alloc.p[1] = 0.5;
    const KktReport report = kkt_check(g, alloc, 2.0, 1e-6);
    EXPECT_FALSE(report.inactive_insecure);
}

TEST(KktCheck, DetectsUnusedBudget)
{
    const SubchannelGains g{{0.9, 0.6}, {0.1, 0.4}, {1.0, 1.0}};
    PowerAllocation zero{{0.0, 0.0}, solve_mu(g, 5.0).mu, 0.0};
    const KktReport report = kkt_check(g, zero, 5.0, 1e-6);
    EXPECT_FALSE(report.budget);
    EXPECT_FALSE(report.passed());
}

TEST(KktCheck, ZeroAllocationWithoutSecureChannels)
{
    const SubchannelGains g{{0.4}, {0.6}, {1.0}};
    EXPECT_TRUE(kkt_check(g, solve_mu(g, 5.0), 5.0, 1e-6).passed());
}

TEST(Lagrangian, UnimodalOnActiveChannels)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(4, 4, 3, seed)));
        const PowerAllocation alloc = solve_mu(g, 20.0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (alloc.p[i] <= 0.0) {
                continue;
            }
            // Integral of the stationarity function in the closed-form convention.
            auto lagrangian = [&](double x) {
                return std::log1p(x * g.c[i]) - std::log1p(x * g.d[i]) - alloc.mu * g.a[i] * x;
            };
            const double span = 4.0 * alloc.p[i];
            int sign_changes = 0;
            double prev_delta = 0.0;
            double prev = lagrangian(0.0);
            std::size_t peak = 0;
            double peak_value = prev;
            for (std::size_t k = 1; k <= 400; ++k) {
                const double x = span * static_cast<double>(k) / 400.0;
                const double value = lagrangian(x);
                const double delta = value - prev;
                if (k > 1 && (delta > 0.0) != (prev_delta > 0.0)) {
                    ++sign_changes;
                }
                if (value > peak_value) {
                    peak_value = value;
                    peak = k;
                }
                prev = value;
                prev_delta = delta;
            }
            EXPECT_LE(sign_changes, 1) << "seed " << seed << " channel " << i;
            // The peak sits at the allocated power (sample 100 of 400).
            EXPECT_NEAR(static_cast<double>(peak), 100.0, 1.0) << "seed " << seed << " channel " << i;
        }
    }
}
