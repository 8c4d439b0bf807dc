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
#include "wiretap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wiretap {

namespace {

Svd run_svd(const ComplexMatrix& m, unsigned int options)
{
    if (!all_finite(m)) {
        throw FactorizationError("svd: matrix contains non-finite entries");
    }
    Svd out;
    if (m.size() == 0) {
        const bool full = (options & Eigen::ComputeFullU) != 0;
        out.U = full ? ComplexMatrix::Identity(m.rows(), m.rows()) : ComplexMatrix(m.rows(), 0);
        out.V = full ? ComplexMatrix::Identity(m.cols(), m.cols()) : ComplexMatrix(m.cols(), 0);
        return out;
    }
    Eigen::JacobiSVD<ComplexMatrix> solver(m, options);
    if (solver.info() != Eigen::Success) {
        throw FactorizationError("svd: Jacobi iteration did not converge");
    }
    const auto& sv = solver.singularValues();
    out.s.assign(sv.data(), sv.data() + sv.size());
    out.U = solver.matrixU();
    out.V = solver.matrixV();
    return out;
}

}  // namespace

bool all_finite(const ComplexMatrix& m)
{
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

double orthonormality_defect(const ComplexMatrix& q)
{
    const ComplexMatrix gram = q.adjoint() * q;
    return (gram - ComplexMatrix::Identity(q.cols(), q.cols())).norm();
}

Svd svd(const ComplexMatrix& m)
{
    return run_svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

Svd svd_full(const ComplexMatrix& m)
{
    return run_svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

ComplexMatrix orthonormal_completion(const ComplexMatrix& q, std::span<const Index> designated)
{
    const Index n = q.rows();
    const Index m = q.cols();
    if (m > n) {
        throw std::invalid_argument("orthonormal_completion: more columns than rows");
    }
    std::vector<bool> fixed(static_cast<std::size_t>(m), false);
    for (Index j : designated) {
        if (j < 0 || j >= m) {
            throw std::invalid_argument("orthonormal_completion: designated column out of range");
        }
        fixed[static_cast<std::size_t>(j)] = true;
    }

    ComplexMatrix basis(n, static_cast<Index>(designated.size()));
    {
        Index k = 0;
        for (Index j = 0; j < m; ++j) {
            if (fixed[static_cast<std::size_t>(j)]) {
                basis.col(k++) = q.col(j);
            }
        }
        basis.conservativeResize(n, k);
    }
    if (orthonormality_defect(basis) > 1e-8) {
        throw std::invalid_argument("orthonormal_completion: designated columns are not orthonormal");
    }

    ComplexMatrix out = q;
    for (Index j = 0; j < m; ++j) {
        if (fixed[static_cast<std::size_t>(j)]) {
            continue;
        }
        // Pick the standard basis vector least represented in the current span.
        Index best = 0;
        double best_norm = -1.0;
        for (Index e = 0; e < n; ++e) {
            const double residual = 1.0 - basis.row(e).squaredNorm();
            if (residual > best_norm + 1e-12) {
                best_norm = residual;
                best = e;
            }
        }
        Eigen::VectorXcd v = Eigen::VectorXcd::Unit(n, best);
        for (int pass = 0; pass < 2; ++pass) {
            v -= basis * (basis.adjoint() * v);
        }
        v.normalize();
        out.col(j) = v;
        basis.conservativeResize(n, basis.cols() + 1);
        basis.col(basis.cols() - 1) = v;
    }
    return out;
}

ComplexMatrix orthonormal_completion(const ComplexMatrix& q, Index k)
{
    std::vector<Index> idx(static_cast<std::size_t>(std::max<Index>(k, 0)));
    for (Index j = 0; j < k; ++j) {
        idx[static_cast<std::size_t>(j)] = j;
    }
    return orthonormal_completion(q, idx);
}

std::size_t rank_with_tol(std::span<const double> s, double tol)
{
    if (s.empty()) {
        return 0;
    }
    const double threshold = tol * std::max(s.front(), 1e-300);
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > threshold; }));
}

ComplexMatrix read_matrix_json(const std::string& text)
{
    const auto doc = nlohmann::json::parse(text);
    const auto rows = doc.at("rows").get<Index>();
    const auto cols = doc.at("cols").get<Index>();
    const auto re = doc.at("re").get<std::vector<double>>();
    const auto im = doc.at("im").get<std::vector<double>>();
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("matrix json: negative dimension");
    }
    const auto count = static_cast<std::size_t>(rows * cols);
    if (re.size() != count || im.size() != count) {
        throw std::invalid_argument("matrix json: expected " + std::to_string(count) + " entries in re and im");
    }
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const auto k = static_cast<std::size_t>(i * cols + j);
            m(i, j) = Complex(re[k], im[k]);
        }
    }
    if (!all_finite(m)) {
        throw std::invalid_argument("matrix json: non-finite entry");
    }
    return m;
}

ComplexMatrix load_matrix(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open matrix file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return read_matrix_json(buffer.str());
    } catch (const std::exception& e) {
        throw std::runtime_error("'" + path + "': " + e.what());
    }
}

std::string matrix_to_json(const ComplexMatrix& m)
{
    std::vector<double> re;
    std::vector<double> im;
    re.reserve(static_cast<std::size_t>(m.size()));
    im.reserve(static_cast<std::size_t>(m.size()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            re.push_back(m(i, j).real());
            im.push_back(m(i, j).imag());
        }
    }
    nlohmann::json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
    return doc.dump();
}

}  // namespace wiretap
