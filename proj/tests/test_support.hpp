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
#include <random>

#include "wiretap/gsvd.hpp"

namespace wiretap::fixtures {

inline ComplexMatrix random_matrix(Index rows, Index cols, std::mt19937_64& rng, double variance = 1.0)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            m(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    return m;
}

inline ChannelPair random_pair(Index n_t, Index n_r, Index n_e, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    ComplexMatrix hr = random_matrix(n_r, n_t, rng);
    ComplexMatrix he = random_matrix(n_e, n_t, rng);
    return ChannelPair(std::move(hr), std::move(he));
}

inline SubchannelGains single_gain(double c, double d, double a)
{
    return SubchannelGains{{c}, {d}, {a}};
}

}  // namespace wiretap::fixtures
