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

#include "qunion/subspace.hpp"

#include "qunion/linalg.hpp"

namespace qunion {
namespace {

Index ambient_for(int n) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count out of range");
  return Index{1} << (2 * n);
}

}  // namespace

OperatorSubspace OperatorSubspace::full(int n) { return {n, Matrix(ambient_for(n), 0)}; }

OperatorSubspace OperatorSubspace::zero(int n) {
  const Index m = ambient_for(n);
  return {n, Matrix::Identity(m, m)};
}

OperatorSubspace OperatorSubspace::from_constraints(int n, const Matrix& rows) {
  const Index m = ambient_for(n);
  if (rows.cols() != m) throw ValidationError("constraint matrix has wrong column count");
  // rows * e = 0  <=>  e is orthogonal to the columns of rows^H.
  return {n, linalg::orthonormal_range(rows.adjoint(), kRankTol)};
}

OperatorSubspace OperatorSubspace::span(int n, const Matrix& vectors) {
  const Index m = ambient_for(n);
  if (vectors.rows() != m) throw ValidationError("span: vector length mismatch");
  const Matrix q = linalg::orthonormal_range(vectors, kRankTol);
  return {n, linalg::orthonormal_complement(q)};
}

OperatorSubspace OperatorSubspace::from_complement(int n, const Matrix& complement) {
  const Index m = ambient_for(n);
  if (complement.rows() != m) throw ValidationError("complement: vector length mismatch");
  return {n, linalg::orthonormal_range(complement, kRankTol)};
}

Matrix OperatorSubspace::basis() const { return linalg::orthonormal_complement(complement_); }

double OperatorSubspace::residual(const Vector& e) const {
  if (e.size() != ambient_dim()) throw ValidationError("residual: vector length mismatch");
  const double nrm = e.norm();
  if (nrm == 0.0 || codim() == 0) return 0.0;
  return (complement_.adjoint() * e).norm() / nrm;
}

OperatorSubspace intersect(std::span<const OperatorSubspace> spaces) {
  if (spaces.empty()) throw ValidationError("intersect needs at least one subspace");
  const int n = spaces.front().num_qubits();
  Index cols = 0;
  for (const auto& s : spaces) {
    if (s.num_qubits() != n) throw ValidationError("intersect: qubit count mismatch");
    cols += s.codim();
  }
  Matrix stacked(spaces.front().ambient_dim(), cols);
  Index at = 0;
  for (const auto& s : spaces) {
    stacked.middleCols(at, s.codim()) = s.complement();
    at += s.codim();
  }
  return OperatorSubspace::from_complement(n, stacked);
}

OperatorSubspace intersect(const OperatorSubspace& a, const OperatorSubspace& b) {
  const OperatorSubspace both[] = {a, b};
  return intersect(both);
}

double containment_residual(const OperatorSubspace& inner, const OperatorSubspace& outer) {
  if (inner.num_qubits() != outer.num_qubits()) {
    throw ValidationError("containment_residual: qubit count mismatch");
  }
  if (outer.codim() == 0 || inner.dim() == 0) return 0.0;
  // ||B_inner^H C_outer|| = ||(I - C_inner C_inner^H) C_outer||.
  const Matrix& ci = inner.complement();
  const Matrix& co = outer.complement();
  const Matrix proj = co - ci * (ci.adjoint() * co);
  return linalg::spectral_norm(proj);
}

double subspace_distance(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.num_qubits() != b.num_qubits() || a.dim() != b.dim()) return 1.0;
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

}  // namespace qunion
