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

#include <string_view>
#include <vector>

#include "wiretap/allocation.hpp"

namespace wiretap {

inline constexpr double kNullThreshold = 1e-9;

/// Transmit directions split by Null(He) and Null(Hr).
///   s1: d_i < eps, c_i >= eps   (inside Null(He), outside Null(Hr))
///   s2: d_i >= eps, c_i >= eps  (outside both)
///   excluded: c_i < eps         (no receiver gain)
struct SubspacePartition {
    std::vector<std::size_t> s1;
    std::vector<std::size_t> s2;
    std::vector<std::size_t> excluded;
};

/// How the uniform baseline spreads a subspace's share of the budget.
enum class UniformMode {
    transmit,  ///< equal radiated power a_i p_i per direction
    symbol,    ///< equal symbol power p_i per direction
};

/// Which S2 directions receive the S2 share of a uniform allocation.
enum class S2Support {
    all,     ///< every direction of S2
    secure,  ///< only secure S2 directions (is_secure)
};

UniformMode parse_uniform_mode(std::string_view text);
std::string_view to_string(UniformMode mode);
S2Support parse_s2_support(std::string_view text);
std::string_view to_string(S2Support support);

struct RateCurve {
    std::vector<double> rho;
    std::vector<double> rate_bits;
};

/// sum_i log2(1 + p_i c_i) - log2(1 + p_i d_i), in bits per channel use.
/// Not clamped: a non-optimal allocation may score below zero.
double secrecy_rate(const SubchannelGains& g, const PowerAllocation& alloc);

/// max(0, secrecy_rate): the rate a scheme can actually deliver securely.
double achievable_secrecy_rate(const SubchannelGains& g, const PowerAllocation& alloc);

/// log2 det(I + Hr Q Hr^H) - log2 det(I + He Q He^H), evaluated through the
/// original channels.
double secrecy_rate_logdet(const ChannelPair& ch, const ComplexMatrix& q);

SubspacePartition classify_subspaces(const SubchannelGains& g, double eps_null = kNullThreshold);

/// Uniform allocation with fraction rho of the budget on S2 and 1 - rho on
/// S1. rho is forced to 1 when S1 is empty and to 0 when S2 (restricted per
/// `support`) is empty; if both are empty after restriction the result is
/// the zero allocation. Throws std::invalid_argument when the partition has
/// neither S1 nor S2 directions or rho is outside [0, 1].
PowerAllocation uniform_allocation(const SubchannelGains& g, const SubspacePartition& part, double budget, double rho,
                                   UniformMode mode = UniformMode::transmit, S2Support support = S2Support::all);

/// Uniform allocation over the secure set (is_secure); zero allocation
/// if that set is empty. Used when the eavesdropper has no nullspace.
PowerAllocation uniform_secure_allocation(const SubchannelGains& g, double budget,
                                          UniformMode mode = UniformMode::transmit);

/// Achievable uniform-allocation rate at every rho of an increasing grid in [0, 1].
RateCurve fraction_sweep(const SubchannelGains& g, const SubspacePartition& part, double budget,
                         std::span<const double> grid, UniformMode mode = UniformMode::transmit,
                         S2Support support = S2Support::all);

}  // namespace wiretap
