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
#include "wiretap/gsvd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wiretap {

namespace {

// Columns of G with a norm below this are treated as exact zeros.
constexpr double kZeroColumn = 1e-14;

// Builds a unitary n x n matrix whose column rows[k] is parallel to
// columns[k]. Designated columns are normalized and re-orthogonalized in
// order of decreasing input norm before the remaining slots are completed.
ComplexMatrix unitary_from_columns(Index n, const std::vector<std::pair<Index, Eigen::VectorXcd>>& columns)
{
    std::vector<std::size_t> order(columns.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return columns[x].second.norm() > columns[y].second.norm();
    });

    ComplexMatrix psi = ComplexMatrix::Zero(n, n);
    std::vector<Index> designated;
    for (std::size_t k : order) {
        Eigen::VectorXcd v = columns[k].second.normalized();
        for (int pass = 0; pass < 2; ++pass) {
            for (Index j : designated) {
                v -= psi.col(j) * psi.col(j).dot(v);
            }
        }
        psi.col(columns[k].first) = v.normalized();
        designated.push_back(columns[k].first);
    }
    return orthonormal_completion(psi, designated);
}

}  // namespace

ChannelPair::ChannelPair(ComplexMatrix hr, ComplexMatrix he) : hr_(std::move(hr)), he_(std::move(he))
{
    if (hr_.cols() != he_.cols()) {
        throw std::invalid_argument("ChannelPair: Hr and He must have the same number of columns");
    }
    if (hr_.cols() == 0 || hr_.rows() == 0 || he_.rows() == 0) {
        throw std::invalid_argument("ChannelPair: empty channel matrix");
    }
    if (!all_finite(hr_) || !all_finite(he_)) {
        throw std::invalid_argument("ChannelPair: non-finite channel entry");
    }
}

DegenerateChannel::DegenerateChannel(std::size_t rank, std::size_t expected)
    : std::runtime_error("degenerate channel: stacked [Hr; He] has rank " + std::to_string(rank) +
                         ", expected " + std::to_string(expected)),
      rank_(rank),
      expected_(expected)
{
}

Index c_row(Index i, Index q, Index n_r)
{
    const Index row = i - std::max<Index>(0, q - n_r);
    return (row >= 0 && row < n_r) ? row : -1;
}

Index d_row(Index i, Index /*q*/, Index n_e)
{
    return (i >= 0 && i < n_e) ? i : -1;
}

ComplexMatrix GsvdFactors::c_matrix() const
{
    const Index n_r = PsiR.rows();
    ComplexMatrix c = ComplexMatrix::Zero(n_r, q);
    for (Index i = 0; i < q; ++i) {
        if (const Index row = c_row(i, q, n_r); row >= 0) {
            c(row, i) = Cdiag[static_cast<std::size_t>(i)];
        }
    }
    return c;
}

ComplexMatrix GsvdFactors::d_matrix() const
{
    const Index n_e = PsiE.rows();
    ComplexMatrix d = ComplexMatrix::Zero(n_e, q);
    for (Index i = 0; i < q; ++i) {
        if (const Index row = d_row(i, q, n_e); row >= 0) {
            d(row, i) = Ddiag[static_cast<std::size_t>(i)];
        }
    }
    return d;
}

GsvdFactors gsvd(const ChannelPair& ch, double tol)
{
    const Index n_t = ch.n_t();
    const Index n_r = ch.n_r();
    const Index n_e = ch.n_e();
    const Index q = std::min(n_t, n_r + n_e);

    ComplexMatrix stacked(n_r + n_e, n_t);
    stacked << ch.hr(), ch.he();
    const Svd outer = svd(stacked);
    const std::size_t rank = rank_with_tol(outer.s, tol);
    if (rank < static_cast<std::size_t>(q)) {
        throw DegenerateChannel(rank, static_cast<std::size_t>(q));
    }

    const ComplexMatrix u1 = outer.U.topRows(n_r);
    const ComplexMatrix u2 = outer.U.bottomRows(n_e);

    // Right singular vectors of U1, reordered so singular values ascend.
    const Svd inner = svd_full(u1);
    RealVector sigma(static_cast<std::size_t>(q), 0.0);
    std::copy(inner.s.begin(), inner.s.end(), sigma.begin());
    std::vector<Index> perm(static_cast<std::size_t>(q));
    std::iota(perm.begin(), perm.end(), Index{0});
    std::stable_sort(perm.begin(), perm.end(), [&](Index x, Index y) {
        return sigma[static_cast<std::size_t>(x)] < sigma[static_cast<std::size_t>(y)];
    });
    ComplexMatrix w(q, q);
    for (Index i = 0; i < q; ++i) {
        w.col(i) = inner.V.col(perm[static_cast<std::size_t>(i)]);
    }

    const ComplexMatrix g1 = u1 * w;
    const ComplexMatrix g2 = u2 * w;

    GsvdFactors f;
    f.q = q;
    f.Cdiag.assign(static_cast<std::size_t>(q), 0.0);
    f.Ddiag.assign(static_cast<std::size_t>(q), 0.0);
    for (Index i = 0; i < q; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double cn = g1.col(i).norm();
        const double dn = g2.col(i).norm();
        f.Cdiag[k] = (c_row(i, q, n_r) >= 0 && cn > kZeroColumn) ? cn : 0.0;
        f.Ddiag[k] = (d_row(i, q, n_e) >= 0 && dn > kZeroColumn) ? dn : 0.0;
    }
    // Roundoff can break ties in the wrong direction by an ulp.
    for (std::size_t k = 1; k < f.Cdiag.size(); ++k) {
        f.Cdiag[k] = std::max(f.Cdiag[k], f.Cdiag[k - 1]);
        f.Ddiag[k] = std::min(f.Ddiag[k], f.Ddiag[k - 1]);
    }

    std::vector<std::pair<Index, Eigen::VectorXcd>> cols_r;
    std::vector<std::pair<Index, Eigen::VectorXcd>> cols_e;
    for (Index i = 0; i < q; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (f.Cdiag[k] > 0.0) {
            cols_r.emplace_back(c_row(i, q, n_r), g1.col(i));
        }
        if (f.Ddiag[k] > 0.0) {
            cols_e.emplace_back(d_row(i, q, n_e), g2.col(i));
        }
    }
    f.PsiR = unitary_from_columns(n_r, cols_r);
    f.PsiE = unitary_from_columns(n_e, cols_e);

    Eigen::VectorXd inv_s(q);
    for (Index i = 0; i < q; ++i) {
        inv_s(i) = 1.0 / outer.s[static_cast<std::size_t>(i)];
    }
    f.A = outer.V.leftCols(q) * inv_s.asDiagonal() * w;
    return f;
}

SubchannelGains subchannel_gains(const GsvdFactors& f)
{
    SubchannelGains g;
    const auto q = static_cast<std::size_t>(f.q);
    g.c.resize(q);
    g.d.resize(q);
    g.a.resize(q);
    for (std::size_t i = 0; i < q; ++i) {
        g.c[i] = f.Cdiag[i] * f.Cdiag[i];
        g.d[i] = f.Ddiag[i] * f.Ddiag[i];
        g.a[i] = f.A.col(static_cast<Index>(i)).squaredNorm();
    }
    return g;
}

double FactorResiduals::worst() const
{
    return std::max({reconstruction_r, reconstruction_e, unitarity_r, unitarity_e, pythagorean, ordering});
}

FactorResiduals verify_factors(const GsvdFactors& f, const ChannelPair& ch)
{
    const auto q = static_cast<std::size_t>(f.q);
    if (f.A.rows() != ch.n_t() || f.A.cols() != f.q || f.PsiR.rows() != ch.n_r() || f.PsiR.cols() != ch.n_r() ||
        f.PsiE.rows() != ch.n_e() || f.PsiE.cols() != ch.n_e() || f.Cdiag.size() != q || f.Ddiag.size() != q) {
        throw std::invalid_argument("verify_factors: factor dimensions do not match the channel pair");
    }
    FactorResiduals r;
    r.reconstruction_r = (ch.hr() * f.A - f.PsiR * f.c_matrix()).norm() / std::max(1.0, ch.hr().norm());
    r.reconstruction_e = (ch.he() * f.A - f.PsiE * f.d_matrix()).norm() / std::max(1.0, ch.he().norm());
    r.unitarity_r = std::max(orthonormality_defect(f.PsiR), orthonormality_defect(f.PsiR.adjoint()));
    r.unitarity_e = std::max(orthonormality_defect(f.PsiE), orthonormality_defect(f.PsiE.adjoint()));
    for (std::size_t i = 0; i < q; ++i) {
        r.pythagorean = std::max(r.pythagorean, std::abs(f.Cdiag[i] * f.Cdiag[i] + f.Ddiag[i] * f.Ddiag[i] - 1.0));
        if (f.Cdiag[i] < 0.0 || f.Ddiag[i] < 0.0) {
            r.ordering = std::max(r.ordering, -std::min(f.Cdiag[i], f.Ddiag[i]));
        }
        if (i > 0) {
            r.ordering = std::max(r.ordering, f.Cdiag[i - 1] - f.Cdiag[i]);
            r.ordering = std::max(r.ordering, f.Ddiag[i] - f.Ddiag[i - 1]);
        }
    }
    return r;
}

}  // namespace wiretap
