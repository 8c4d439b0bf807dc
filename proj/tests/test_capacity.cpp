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

#include <algorithm>
#include <cmath>

#include "test_support.hpp"
#include "wiretap/capacity.hpp"

using namespace wiretap;

namespace {

std::vector<double> grid_0_to_1(double step)
{
    std::vector<double> grid;
    for (int k = 0; k * step <= 1.0 + 1e-12; ++k) {
        grid.push_back(std::min(1.0, k * step));
    }
    return grid;
}

}  // namespace

TEST(SecrecyRate, ZeroAllocation)
{
    const SubchannelGains g{{0.8, 0.4}, {0.2, 0.6}, {1.0, 1.0}};
    EXPECT_EQ(secrecy_rate(g, PowerAllocation{{0.0, 0.0}, 1.0, 0.0}), 0.0);
}

TEST(SecrecyRate, SingleSubchannel)
{
    const SubchannelGains g = fixtures::single_gain(0.8, 0.2, 1.0);
    EXPECT_NEAR(secrecy_rate(g, PowerAllocation{{0.1940}, 0.5, 0.1940}), 0.1533, 1e-4);
    EXPECT_NEAR(secrecy_rate(g, solve_mu(g, 0.19397951183793868)), 0.15320994925785766, 1e-10);
}

TEST(SecrecyRate, LengthMismatchThrows)
{
    EXPECT_THROW(secrecy_rate(fixtures::single_gain(0.8, 0.2, 1.0), PowerAllocation{{1.0, 1.0}, 1.0, 2.0}),
                 std::invalid_argument);
}

TEST(SecrecyRate, MatchesLogDetThroughChannels)
{
    static const Index shapes[][3] = {{5, 5, 4}, {4, 4, 4}, {3, 2, 4}, {6, 3, 2}, {4, 2, 3}};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto& s = shapes[seed % 5];
        const ChannelPair ch = fixtures::random_pair(s[0], s[1], s[2], 300 + seed);
        const GsvdFactors f = gsvd(ch);
        const SubchannelGains g = subchannel_gains(f);
        const PowerAllocation optimal = solve_mu(g, 10.0);
        EXPECT_NEAR(secrecy_rate(g, optimal), secrecy_rate_logdet(ch, input_covariance(f, optimal)), 1e-8);
        // The identity holds for any diagonal allocation, not only the optimum.
        const SubspacePartition part = classify_subspaces(g);
        const PowerAllocation uniform = uniform_allocation(g, part, 10.0, 0.5);
        EXPECT_NEAR(secrecy_rate(g, uniform), secrecy_rate_logdet(ch, input_covariance(f, uniform)), 1e-8);
    }
}

TEST(SecrecyRate, OptimalPerChannelTermsNonNegative)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(4, 4, 4, seed)));
        const PowerAllocation alloc = solve_mu(g, 50.0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_GE(std::log2(1.0 + alloc.p[i] * g.c[i]) - std::log2(1.0 + alloc.p[i] * g.d[i]), 0.0);
        }
    }
}

TEST(ClassifySubspaces, EavesdropperNullspace)
{
    const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(5, 5, 4, 6)));
    const SubspacePartition part = classify_subspaces(g);
    EXPECT_EQ(part.s1.size(), 1u);
    EXPECT_EQ(part.s2.size(), 4u);
    EXPECT_TRUE(part.excluded.empty());
}

TEST(ClassifySubspaces, NoNullspaceWhenEavesdropperIsLarge)
{
    const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(3, 3, 4, 6)));
    EXPECT_TRUE(classify_subspaces(g).s1.empty());
}

TEST(ClassifySubspaces, IdenticalChannels)
{
    const ChannelPair ch(ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(3, 3));
    const SubspacePartition part = classify_subspaces(subchannel_gains(gsvd(ch)));
    EXPECT_TRUE(part.s1.empty());
    EXPECT_EQ(part.s2.size(), 3u);
}

TEST(ClassifySubspaces, PartitionIsDisjointAndCovering)
{
    static const Index shapes[][3] = {{5, 5, 4}, {5, 3, 4}, {6, 2, 3}, {3, 4, 2}};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto& s = shapes[seed % 4];
        const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(s[0], s[1], s[2], seed)));
        const SubspacePartition part = classify_subspaces(g);
        std::vector<std::size_t> all;
        all.insert(all.end(), part.s1.begin(), part.s1.end());
        all.insert(all.end(), part.s2.begin(), part.s2.end());
        all.insert(all.end(), part.excluded.begin(), part.excluded.end());
        std::sort(all.begin(), all.end());
        ASSERT_EQ(all.size(), g.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            EXPECT_EQ(all[i], i);
        }
        for (std::size_t i : part.s1) {
            EXPECT_LT(g.d[i], kNullThreshold);
        }
        for (std::size_t i : part.s2) {
            EXPECT_GE(g.d[i], kNullThreshold);
            EXPECT_GE(g.c[i], kNullThreshold);
        }
        // c_i + d_i = 1, so no direction has both gains zero.
        const Index q = static_cast<Index>(g.size());
        EXPECT_EQ(static_cast<Index>(part.s1.size()), std::max<Index>(0, q - s[2]));
        EXPECT_EQ(static_cast<Index>(part.excluded.size()), std::max<Index>(0, q - s[1]));
    }
}

TEST(UniformAllocation, AllOnNullspaceDirection)
{
    const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(5, 5, 4, 21)));
    const SubspacePartition part = classify_subspaces(g);
    ASSERT_EQ(part.s1.size(), 1u);
    const PowerAllocation alloc = uniform_allocation(g, part, 100.0, 0.0);
    const std::size_t i = part.s1[0];
    EXPECT_NEAR(alloc.p[i] * g.a[i], 100.0, 1e-10);
    EXPECT_EQ(g.d[i] * alloc.p[i] < 1e-9, true);
    EXPECT_NEAR(alloc.effective_power, 100.0, 1e-10);
    for (std::size_t k : part.s2) {
        EXPECT_EQ(alloc.p[k], 0.0);
    }
}

TEST(UniformAllocation, OnlyS2)
{
    const SubchannelGains g{{0.3, 0.6, 0.9}, {0.7, 0.4, 0.1}, {1.0, 2.0, 0.5}};
    const SubspacePartition part = classify_subspaces(g);
    ASSERT_TRUE(part.s1.empty());
    // rho is forced to 1 when S1 is empty.
    const PowerAllocation alloc = uniform_allocation(g, part, 9.0, 0.2);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(alloc.p[i], 3.0 / g.a[i], 1e-12);
    }
    EXPECT_NEAR(alloc.effective_power, 9.0, 1e-12);

    const PowerAllocation symbol = uniform_allocation(g, part, 9.0, 1.0, UniformMode::symbol);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(symbol.p[i], 9.0 / 3.5, 1e-12);
    }
    EXPECT_NEAR(symbol.effective_power, 9.0, 1e-12);

    const PowerAllocation secure = uniform_allocation(g, part, 9.0, 1.0, UniformMode::transmit, S2Support::secure);
    EXPECT_EQ(secure.p[0], 0.0);
    EXPECT_NEAR(secure.p[1], 4.5 / 2.0, 1e-12);
    EXPECT_NEAR(secure.p[2], 4.5 / 0.5, 1e-12);
}

TEST(UniformAllocation, Errors)
{
    const SubchannelGains g{{0.0}, {1.0}, {1.0}};
    EXPECT_THROW(uniform_allocation(g, classify_subspaces(g), 1.0, 0.5), std::invalid_argument);
    const SubchannelGains ok{{0.6}, {0.4}, {1.0}};
    EXPECT_THROW(uniform_allocation(ok, classify_subspaces(ok), 1.0, 1.5), std::invalid_argument);
    EXPECT_THROW(uniform_allocation(ok, classify_subspaces(ok), 1.0, -0.1), std::invalid_argument);
}

TEST(UniformAllocation, NeverBeatsOptimal)
{
    const std::vector<double> grid = grid_0_to_1(0.05);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Index n_e = seed % 2 == 0 ? 4 : 5;
        const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(5, 5, n_e, seed)));
        const SubspacePartition part = classify_subspaces(g);
        for (double budget : {1.0, 100.0}) {
            const double optimal = secrecy_rate(g, solve_mu(g, budget));
            for (double rho : grid) {
                for (UniformMode mode : {UniformMode::transmit, UniformMode::symbol}) {
                    for (S2Support support : {S2Support::all, S2Support::secure}) {
                        const PowerAllocation u = uniform_allocation(g, part, budget, rho, mode, support);
                        EXPECT_LE(secrecy_rate(g, u), optimal + 1e-9);
                    }
                }
            }
            EXPECT_LE(secrecy_rate(g, uniform_secure_allocation(g, budget)), optimal + 1e-9);
        }
    }
}

TEST(UniformSecureAllocation, ZeroWithoutSecureDirections)
{
    const SubchannelGains g{{0.2, 0.5}, {0.8, 0.5}, {1.0, 1.0}};
    const PowerAllocation alloc = uniform_secure_allocation(g, 10.0);
    EXPECT_EQ(alloc.effective_power, 0.0);
    EXPECT_EQ(secrecy_rate(g, alloc), 0.0);
}

TEST(FractionSweep, IdenticalChannelsGiveZero)
{
    const ChannelPair ch(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2));
    const SubchannelGains g = subchannel_gains(gsvd(ch));
    const RateCurve curve = fraction_sweep(g, classify_subspaces(g), 10.0, std::vector<double>{0.0, 0.5, 1.0});
    ASSERT_EQ(curve.rate_bits.size(), 3u);
    for (double r : curve.rate_bits) {
        EXPECT_NEAR(r, 0.0, 1e-12);
    }
}

TEST(FractionSweep, BelowCapacityAndContinuous)
{
    const std::vector<double> grid = grid_0_to_1(0.01);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SubchannelGains g = subchannel_gains(gsvd(fixtures::random_pair(5, 5, 4, 900 + seed)));
        const SubspacePartition part = classify_subspaces(g);
        const double optimal = secrecy_rate(g, solve_mu(g, 100.0));
        for (S2Support support : {S2Support::all, S2Support::secure}) {
            const RateCurve curve = fraction_sweep(g, part, 100.0, grid, UniformMode::transmit, support);
            EXPECT_LE(*std::max_element(curve.rate_bits.begin(), curve.rate_bits.end()), optimal + 1e-9);
            // Each share enters through log(1 + share * gain), so the curve is
            // log-steep as either share goes to zero; check away from the ends.
            for (std::size_t k = 6; k + 5 < curve.rate_bits.size(); ++k) {
                EXPECT_LT(std::abs(curve.rate_bits[k] - curve.rate_bits[k - 1]), 0.5) << "seed " << seed << " k " << k;
            }
        }
    }
}

TEST(FractionSweep, RejectsUnsortedGrid)
{
    const SubchannelGains g{{0.6}, {0.4}, {1.0}};
    EXPECT_THROW(fraction_sweep(g, classify_subspaces(g), 1.0, std::vector<double>{0.5, 0.2}),
                 std::invalid_argument);
}

TEST(ZeroCapacity, AllGeneralizedSingularValuesAtMostOne)
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix hr = fixtures::random_matrix(3, 3, rng);
        // He = 2 Hr: every generalized singular value equals 1/2.
        const ChannelPair ch(hr, 2.0 * hr);
        const SubchannelGains g = subchannel_gains(gsvd(ch));
        const PowerAllocation alloc = solve_mu(g, 100.0);
        EXPECT_EQ(secrecy_rate(g, alloc), 0.0);
        EXPECT_EQ(alloc.effective_power, 0.0);
    }
}

TEST(ZeroCapacity, PositiveIffSomeGeneralizedSingularValueAboveOne)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        // A weak receiver makes capacity-zero draws common.
        std::mt19937_64 rng(seed);
        const ComplexMatrix hr = fixtures::random_matrix(2, 2, rng, 0.05);
        const ComplexMatrix he = fixtures::random_matrix(3, 2, rng, 1.0);
        const ChannelPair ch(hr, he);
        const SubchannelGains g = subchannel_gains(gsvd(ch));
        const double rate = secrecy_rate(g, solve_mu(g, 10.0));

        Eigen::GeneralizedSelfAdjointEigenSolver<ComplexMatrix> pencil(hr.adjoint() * hr, he.adjoint() * he,
                                                                       Eigen::EigenvaluesOnly);
        const bool above_one = pencil.eigenvalues().maxCoeff() > 1.0;
        EXPECT_EQ(rate > 0.0, above_one) << "seed " << seed;
    }
}
