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

#include <optional>
#include <vector>

#include "qunion/code.hpp"
#include "qunion/pauli.hpp"
#include "qunion/subspace.hpp"

namespace qunion {

/// First violated matrix-element condition. For an off-diagonal failure,
/// value = <c_i|E|c_j>. For a diagonal failure (i == j), value is the
/// deviation of <c_i|E|c_i> from its required value.
struct Witness {
  Index i = 0;
  Index j = 0;
  Scalar value;
};

struct MembershipReport {
  bool member = false;
  Scalar alpha;  // mean diagonal <c_i|E|c_i>
  std::optional<Witness> witness;
};

/// K x K matrix <c_i|E|c_j>.
Matrix code_matrix_elements(const QuantumCode& c, const PauliOperator& e);
Matrix code_matrix_elements(const QuantumCode& c, const Matrix& e);

/// Off-diagonal elements vanish and diagonal elements agree.
MembershipReport check_erasure(const QuantumCode& c, const PauliOperator& e);
MembershipReport check_erasure(const QuantumCode& c, const Matrix& e);

/// <c_i|E|c_j> = (tr E / 2^n) delta_ij.
MembershipReport check_pure(const QuantumCode& c, const PauliOperator& e);
MembershipReport check_pure(const QuantumCode& c, const Matrix& e);

/// Table T with T(i*K + j, s) = <c_i|sigma_s|c_j> over the Pauli basis.
Matrix element_table(const QuantumCode& c);

/// Constraint rows: off-diagonal pairs (i, j), i != j, lexicographic; then
/// d_i - d_0 for i >= 1.
Matrix erasure_constraints(const QuantumCode& c);
/// Rows <c_i|sigma|c_j> - delta_ij tr(sigma)/2^n over all K^2 pairs.
Matrix pure_constraints(const QuantumCode& c);
/// Rows <c_i|sigma|c_j> over all K^2 pairs.
Matrix annihilator_constraints(const QuantumCode& c);

OperatorSubspace erasure_space(const QuantumCode& c);
OperatorSubspace pure_erasure_space(const QuantumCode& c);
/// Operators with every code matrix element zero (P E P = 0).
OperatorSubspace annihilator_space(const QuantumCode& c);

enum class Condition { kErasure, kPure };

struct Violation {
  PauliOperator op;
  Witness witness;
};

struct WeightClass {
  int weight = 0;
  Index members = 0;
  Index non_members = 0;
  std::vector<Violation> violators;
};

struct Classification {
  Condition condition = Condition::kErasure;
  std::vector<WeightClass> per_weight;  // weights 0..max_weight
};

Classification classify_paulis(const QuantumCode& c, int max_weight, Condition cond);

struct Distance {
  int value = 0;
  /// No Pauli fails; value is n + 1.
  bool degenerate = false;
};

/// Smallest weight of a phase-0 Pauli outside the erasure space.
Distance minimum_distance(const QuantumCode& c);
/// Smallest weight of a phase-0 Pauli violating the pure condition.
Distance pure_distance(const QuantumCode& c);

/// A basis of span(spanning columns) in which each element is Hermitian
/// (real coordinates) or anti-Hermitian (imaginary coordinates). Candidates
/// (E + E^dagger)/2 and (E - E^dagger)/2 are taken column by column and kept
/// when independent of those already chosen. Throws ValidationError if the
/// span is not closed under adjoint.
Matrix hermitian_basis(int n, const Matrix& spanning);
Matrix hermitian_basis(const OperatorSubspace& s);

/// Operator adjoint in Pauli coordinates (complex conjugation).
Vector adjoint_coordinates(const Vector& e);

/// Size of the union of supports of Pauli components with |e_k| > kElementTol.
int operator_weight(const Vector& e, int n);

}  // namespace qunion
