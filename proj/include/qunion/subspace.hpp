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

#include <span>
#include <vector>

#include "qunion/types.hpp"

namespace qunion {

/// A linear subspace of the 4^n-dimensional operator space, in coordinates
/// over the phase-0 Pauli basis (see PauliBasis).
///
/// The subspace is held through an orthonormal basis of its orthogonal
/// complement: S = { e : C^H e = 0 }. The operator maps used in this library
/// are unitary in Pauli coordinates, so they act on C directly. basis()
/// materializes an orthonormal basis of S when one is needed.
class OperatorSubspace {
 public:
  OperatorSubspace() = default;

  static OperatorSubspace full(int n);
  static OperatorSubspace zero(int n);
  /// { e : rows * e = 0 }.
  static OperatorSubspace from_constraints(int n, const Matrix& rows);
  /// span of the columns of `vectors`.
  static OperatorSubspace span(int n, const Matrix& vectors);
  /// Subspace whose orthogonal complement is spanned by the columns of
  /// `complement` (need not be orthonormal).
  static OperatorSubspace from_complement(int n, const Matrix& complement);

  int num_qubits() const { return n_; }
  Index ambient_dim() const { return complement_.rows(); }
  Index dim() const { return ambient_dim() - complement_.cols(); }
  Index codim() const { return complement_.cols(); }

  /// Orthonormal columns spanning the complement.
  const Matrix& complement() const { return complement_; }
  /// Orthonormal columns spanning the subspace.
  Matrix basis() const;

  /// Relative distance ||e - P_S e|| / ||e|| (0 for e = 0).
  double residual(const Vector& e) const;
  bool contains(const Vector& e, double tol = kResidualTol) const { return residual(e) < tol; }

  /// Applies a unitary map on coordinates to the complement.
  template <typename Map>
  OperatorSubspace mapped(Map&& map) const {
    Matrix c(complement_.rows(), complement_.cols());
    for (Index k = 0; k < complement_.cols(); ++k) c.col(k) = map(Vector(complement_.col(k)));
    return from_complement(n_, c);
  }

 private:
  OperatorSubspace(int n, Matrix complement) : n_(n), complement_(std::move(complement)) {}

  int n_ = 0;
  Matrix complement_;
};

/// Common subspace of all inputs.
OperatorSubspace intersect(std::span<const OperatorSubspace> spaces);
OperatorSubspace intersect(const OperatorSubspace& a, const OperatorSubspace& b);

/// sin of the largest principal angle between `inner` and its projection
/// onto `outer`; zero iff inner is contained in outer.
double containment_residual(const OperatorSubspace& inner, const OperatorSubspace& outer);

/// max of both containment residuals; 1 when dimensions differ.
double subspace_distance(const OperatorSubspace& a, const OperatorSubspace& b);

}  // namespace qunion
