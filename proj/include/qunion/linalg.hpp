// Copyright 2026 The qunion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small dense linear-algebra kernels used by the subspace machinery. All of
// them take arbitrary Eigen expressions and return plain matrices.

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace qunion::linalg {

/// Number of singular values above `rel_tol * sigma_max`. A matrix whose
/// largest singular value is below `abs_floor` has rank zero.
template <typename Derived>
Eigen::Index numerical_rank(const Eigen::MatrixBase<Derived>& a,
                            double rel_tol = 1e-8, double abs_floor = 1e-12) {
  using Plain = typename Derived::PlainObject;
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<Plain> svd(a.eval());
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) < abs_floor) return 0;
  const double cut = rel_tol * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return r;
}

/// Orthonormal basis (as columns) of the column space of `a`.
template <typename Derived>
typename Derived::PlainObject orthonormal_range(const Eigen::MatrixBase<Derived>& a,
                                                double rel_tol = 1e-8,
                                                double abs_floor = 1e-12) {
  using Plain = typename Derived::PlainObject;
  if (a.cols() == 0 || a.rows() == 0) return Plain(a.rows(), 0);
  Eigen::BDCSVD<Plain> svd(a.eval(), Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  if (s.size() > 0 && s(0) >= abs_floor) {
    const double cut = rel_tol * s(0);
    while (r < s.size() && s(r) > cut) ++r;
  }
  return svd.matrixU().leftCols(r);
}

/// Orthonormal basis of the orthogonal complement of span(q), where q already
/// has orthonormal columns.
template <typename Derived>
typename Derived::PlainObject orthonormal_complement(const Eigen::MatrixBase<Derived>& q) {
  using Plain = typename Derived::PlainObject;
  const Eigen::Index m = q.rows();
  const Eigen::Index c = q.cols();
  if (c == 0) return Plain::Identity(m, m);
  if (c >= m) return Plain(m, 0);
  Eigen::HouseholderQR<Plain> qr(q.eval());
  Plain tail = Plain::Zero(m, m - c);
  tail.bottomRows(m - c).setIdentity();
  return qr.householderQ() * tail;
}

/// Largest singular value.
template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainObject;
  if (a.size() == 0) return 0.0;
  // Work with the smaller Gram matrix.
  Plain g = a.rows() < a.cols() ? Plain(a * a.adjoint()) : Plain(a.adjoint() * a);
  Eigen::SelfAdjointEigenSolver<Plain> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace qunion::linalg
