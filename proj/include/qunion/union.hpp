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
#include <string>
#include <vector>

#include "qunion/erasure.hpp"
#include "qunion/state.hpp"
#include "qunion/subspace.hpp"

namespace qunion {

struct UnionBuildReport {
  std::vector<std::string> component_labels;
  double max_cross_overlap = 0.0;  // max |<c_i^(mu)|c_j^(nu)>|, mu != nu
  Index k = 0;
  int n = 0;
};

struct UnionResult {
  QuantumCode code;
  UnionBuildReport report;
};

/// Code spanned by the concatenated bases of mutually orthogonal codes.
UnionResult union_code(std::span<const QuantumCode> codes, std::string label = "");
UnionResult union_code(const QuantumCode& a, const QuantumCode& b, std::string label = "");

// Operator-space maps. Pauli-type actions are applied symbolically on
// Pauli coordinates; everything else goes through dense 2^n x 2^n products.

/// E -> U E U^dagger.
Vector conjugate_coordinates(const Vector& e, const UnitaryAction& u);
/// E -> U E.
Vector left_multiply_coordinates(const Vector& e, const UnitaryAction& u);
/// E -> E V.
Vector right_multiply_coordinates(const Vector& e, const UnitaryAction& v);

OperatorSubspace conjugate_subspace(const OperatorSubspace& s, const UnitaryAction& u);
OperatorSubspace left_multiply_subspace(const OperatorSubspace& s, const UnitaryAction& u);
/// { E V : E in s }. The union pipelines pass V = U^dagger.
OperatorSubspace right_multiply_subspace(const OperatorSubspace& s, const UnitaryAction& v);

/// { E : <c_1|E|c_1> = <c_1|U^dagger E U|c_1> }, using basis vector `which`.
OperatorSubspace m_space(const QuantumCode& c, const UnitaryAction& u, Index which = 0);

/// Intersection formula for E(C + UC):
///   E(C) & U E(C) U^dagger & N(C) U^dagger & U N(C) & M(|c_1>, U),
/// where N(C) = annihilator_space(C) encodes that every element
/// <c_i|E U|c_j> and <c_i|U^dagger E|c_j> vanishes.
OperatorSubspace union_erasure_space_formula(const QuantumCode& c, const UnitaryAction& u);

/// Intersection formula for E_pure(C + UC):
///   E_pure(C) & U E_pure(C) U^dagger & N(C) U^dagger & U N(C).
OperatorSubspace union_pure_space_formula(const QuantumCode& c, const UnitaryAction& u);

/// Variant of the pure formula with the one-sided factors taken from
/// E_pure(C) instead of N(C). Kept for comparison only: it admits U^dagger
/// itself and is in general strictly larger than E_pure(C + UC).
OperatorSubspace pure_space_trace_variant(const QuantumCode& c, const UnitaryAction& u);

struct FormulaCheck {
  Index dim = 0;          // dimension from the intersection formula
  Index direct_dim = 0;   // dimension computed on the union basis
  double residual = 0.0;  // subspace_distance between the two
  bool matches_direct = false;
  /// Largest distance between the final space and the one obtained with
  /// M(|c_i>, U) for other basis vectors i (erasure formula only).
  double m_space_spread = 0.0;
};

/// Throws ValidationError unless c and U c are orthogonal.
FormulaCheck check_union_erasure_formula(const QuantumCode& c, const UnitaryAction& u);
FormulaCheck check_union_pure_formula(const QuantumCode& c, const UnitaryAction& u);

/// Operators shift^i(tau * shift^j(e)) (left) or shift^i(shift^j(e) * tau)
/// (right) over all cyclic shifts, with phases dropped and duplicates removed.
std::vector<PauliOperator> shifted_products(const PauliOperator& e, const PauliOperator& tau,
                                            bool left);

/// All cyclic shifts of p (phase dropped), deduplicated, in enumeration order.
std::vector<PauliOperator> cyclic_shifts(const PauliOperator& p);

}  // namespace qunion
