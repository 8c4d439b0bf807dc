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

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wiretap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = std::vector<double>;
using Index = Eigen::Index;

/// Default relative tolerance for factorization residuals.
inline constexpr double kFactorizationTol = 1e-10;
/// Default relative tolerance for numerical rank decisions.
inline constexpr double kRankTol = 1e-9;

/// Thrown when an iterative factorization fails to converge or meets non-finite data.
class FactorizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// M = U * diag(s) * V^H with singular values in descending order.
/// U is rows x r and V is cols x r, r = min(rows, cols).
struct Svd {
    ComplexMatrix U;
    RealVector s;
    ComplexMatrix V;
};

bool all_finite(const ComplexMatrix& m);

/// Frobenius norm of the deviation of Q^H Q from the identity.
double orthonormality_defect(const ComplexMatrix& q);

/// Thin SVD. Throws FactorizationError on non-finite input or if the solver
/// reports failure.
Svd svd(const ComplexMatrix& m);

/// Full SVD: U is rows x rows and V is cols x cols, s holds min(rows, cols)
/// values in descending order.
Svd svd_full(const ComplexMatrix& m);

/// Completes the designated orthonormal columns of an n x m matrix (m <= n)
/// to a matrix with m orthonormal columns. The designated columns are kept
/// as they are; all others are overwritten.
///
/// Fill-in vectors are taken from the standard basis: at each step the basis
/// vector with the largest component orthogonal to the current columns is
/// projected (twice) and normalized, so the result is deterministic.
///
/// Throws std::invalid_argument if the designated columns are not orthonormal
/// within 1e-8 or m > n.
ComplexMatrix orthonormal_completion(const ComplexMatrix& q, std::span<const Index> designated);

/// Same as above with the first k columns designated.
ComplexMatrix orthonormal_completion(const ComplexMatrix& q, Index k);

/// Number of entries of a descending sequence above tol * max(s_0, 1e-300).
std::size_t rank_with_tol(std::span<const double> s, double tol);

/// Reads the JSON matrix format {"rows", "cols", "re", "im"}.
ComplexMatrix read_matrix_json(const std::string& text);
ComplexMatrix load_matrix(const std::string& path);
std::string matrix_to_json(const ComplexMatrix& m);

}  // namespace wiretap
