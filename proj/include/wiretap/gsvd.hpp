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

#include <cstddef>
#include <stdexcept>
#include <string>

#include "wiretap/linalg.hpp"

namespace wiretap {

/// Legitimate (Hr, n_r x n_t) and eavesdropper (He, n_e x n_t) channels
/// sharing the transmit dimension.
class ChannelPair {
public:
    ChannelPair(ComplexMatrix hr, ComplexMatrix he);

    const ComplexMatrix& hr() const { return hr_; }
    const ComplexMatrix& he() const { return he_; }
    Index n_t() const { return hr_.cols(); }
    Index n_r() const { return hr_.rows(); }
    Index n_e() const { return he_.rows(); }

private:
    ComplexMatrix hr_;
    ComplexMatrix he_;
};

/// The stacked channel [Hr; He] has rank below q = min(n_t, n_r + n_e).
class DegenerateChannel : public std::runtime_error {
public:
    DegenerateChannel(std::size_t rank, std::size_t expected);
    std::size_t rank() const { return rank_; }
    std::size_t expected() const { return expected_; }

private:
    std::size_t rank_;
    std::size_t expected_;
};

/// Joint factorization Hr A = PsiR C, He A = PsiE D.
///
/// C (n_r x q) and D (n_e x q) are stored through their q generalized
/// diagonals. Column i of D carries its entry in row i; column i of C carries
/// its entry in row i - max(0, q - n_r). Columns that fall outside the row
/// range hold an implicit zero, so zeros of Cdiag lead and zeros of Ddiag
/// trail, matching the ascending/descending ordering.
struct GsvdFactors {
    ComplexMatrix A;
    ComplexMatrix PsiR;
    ComplexMatrix PsiE;
    RealVector Cdiag;
    RealVector Ddiag;
    Index q = 0;

    /// Rectangular embeddings of Cdiag and Ddiag.
    ComplexMatrix c_matrix() const;
    ComplexMatrix d_matrix() const;
};

/// Row of C holding the diagonal entry of column i, or -1 when implicit zero.
Index c_row(Index i, Index q, Index n_r);
/// Row of D holding the diagonal entry of column i, or -1 when implicit zero.
Index d_row(Index i, Index q, Index n_e);

/// Per-subchannel scalars: c_i = Cdiag_i^2, d_i = Ddiag_i^2, a_i = (A^H A)_ii.
struct SubchannelGains {
    RealVector c;
    RealVector d;
    RealVector a;

    std::size_t size() const { return c.size(); }
};

/// Computes the GSVD of the channel pair.
///
/// The stacked matrix K = [Hr; He] is reduced by a thin SVD K = U S V^H. The
/// top block U1 of U is diagonalized by its right singular vectors W (sorted
/// so that singular values ascend); because U^H U = I, the columns of
/// U1 W and U2 W are mutually orthogonal with squared norms summing to one.
/// Normalized columns give PsiR and PsiE (re-orthonormalized and completed),
/// and A = V S^{-1} W.
///
/// Throws DegenerateChannel when rank(K) < q at relative tolerance `tol`.
GsvdFactors gsvd(const ChannelPair& ch, double tol = kRankTol);

SubchannelGains subchannel_gains(const GsvdFactors& f);

struct FactorResiduals {
    double reconstruction_r = 0.0;  ///< ||Hr A - PsiR C||_F / max(1, ||Hr||_F)
    double reconstruction_e = 0.0;  ///< ||He A - PsiE D||_F / max(1, ||He||_F)
    double unitarity_r = 0.0;
    double unitarity_e = 0.0;
    double pythagorean = 0.0;  ///< max_i |Cdiag_i^2 + Ddiag_i^2 - 1|
    double ordering = 0.0;     ///< largest violation of the C ascending / D descending order

    double worst() const;
    bool passes(double tol) const { return worst() <= tol; }
};

/// Evaluates every factorization invariant. Throws std::invalid_argument on
/// dimension mismatch between the factors and the channel pair.
FactorResiduals verify_factors(const GsvdFactors& f, const ChannelPair& ch);

}  // namespace wiretap
