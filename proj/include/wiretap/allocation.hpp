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

#include "wiretap/gsvd.hpp"

namespace wiretap {

/// Diagonal symbol powers together with the multiplier that produced them.
///
/// `mu` follows the convention of the closed form (no 1/ln 2 factor). A zero
/// allocation produced because no subchannel is secure carries mu = +inf.
struct PowerAllocation {
    RealVector p;
    double mu = 0.0;
    double effective_power = 0.0;  ///< sum_i a_i p_i = Tr(A^H A P)
};

inline constexpr double kDefaultPowerTol = 1e-10;
inline constexpr int kMaxBisection = 200;

/// A subchannel is secure when c - d exceeds this margin. Pairs whose
/// generalized singular value is exactly 1 come out of the factorization
/// with c - d at roundoff level of either sign; they carry no secrecy.
inline constexpr double kSecureMargin = 1e-12;

inline bool is_secure(double c, double d)
{
    return c - d > kSecureMargin;
}

/// Derivative of the per-subchannel Lagrangian term, in bits:
/// (1/ln 2)(c/(1+xc) - d/(1+xd)) - mu a.
double f_of_x(double x, double c, double d, double a, double mu);

/// Largest root of c/(1+xc) - d/(1+xd) = mu a for c > d, c + d = 1.
///
/// Evaluated in the rationalized form 2((c-d)/(mu a) - 1) / (1 + sqrt(R)),
/// R = 1 - 4cd + 4(c-d)cd/(mu a), which equals (-1 + sqrt(R)) / (2cd) and
/// stays finite as cd -> 0. May be negative; callers clamp.
///
/// Throws std::domain_error if c <= d, mu <= 0, a <= 0 or |c + d - 1| > 1e-10.
double largest_root(double c, double d, double a, double mu);

/// Closed-form allocation for a given multiplier.
PowerAllocation power_for_mu(const SubchannelGains& g, double mu);

/// Bisects the multiplier until the effective power meets the budget within
/// rel_tol * budget. Only secure subchannels (see is_secure) receive power;
/// returns the zero allocation (mu = +inf) when there are none.
PowerAllocation solve_mu(const SubchannelGains& g, double budget, double rel_tol = kDefaultPowerTol);

/// Q_x = A diag(p) A^H.
ComplexMatrix input_covariance(const GsvdFactors& f, const PowerAllocation& alloc);

double effective_power(const SubchannelGains& g, std::span<const double> p);

}  // namespace wiretap
