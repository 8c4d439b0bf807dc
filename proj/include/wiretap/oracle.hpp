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

#include <string>
#include <vector>

#include "wiretap/allocation.hpp"

namespace wiretap {

inline constexpr std::size_t kOracleMaxSubchannels = 4;

struct OracleResult {
    PowerAllocation alloc;
    double rate_bits = 0.0;
};

/// Brute-force maximization of the diagonal secrecy-rate objective over
/// {p >= 0 : sum_i a_i p_i <= budget}.
///
/// The effective powers e_i = a_i p_i are enumerated on a lattice with
/// `resolution` steps per axis; ties keep the lexicographically smallest
/// point. The best lattice point is then refined by `sweeps` rounds of
/// pairwise golden-section exchanges between every two coordinates,
/// including the unused-budget slack. Nothing here uses the closed form.
///
/// Throws std::invalid_argument if q > 4 or resolution < 50.
OracleResult grid_maximize(const SubchannelGains& g, double budget, std::size_t resolution, int sweeps = 3);

struct KktReport {
    bool inactive_insecure = true;  ///< (a) p_i = 0 on insecure subchannels
    bool stationarity = true;       ///< (b) c/(1+pc) - d/(1+pd) = mu a on active channels
    bool inactive_secure = true;    ///< (c) c - d <= mu a on inactive secure channels
    bool budget = true;             ///< (d) sum a_i p_i = budget when a secure channel exists
    double worst_stationarity = 0.0;
    double worst_budget = 0.0;
    std::vector<std::string> failures;

    bool passed() const { return inactive_insecure && stationarity && inactive_secure && budget; }
};

/// First-order optimality check of an allocation under the closed-form
/// multiplier convention. Stationarity and the inactive-channel condition
/// are compared relative to mu a_i; the budget relative to `budget`.
KktReport kkt_check(const SubchannelGains& g, const PowerAllocation& alloc, double budget, double tol);

}  // namespace wiretap
