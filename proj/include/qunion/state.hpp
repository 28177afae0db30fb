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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qunion/pauli.hpp"
#include "qunion/types.hpp"

namespace qunion {

struct BasisTerm {
  Scalar amplitude;
  std::string bits;  // leftmost character is qubit 0
};

/// State vector on n qubits. Basis index bit (n-1-q) holds qubit q.
class Ket {
 public:
  Ket() = default;
  Ket(int n, Vector amplitudes);

  static Ket basis_state(std::string_view bits);
  /// Sum of amplitude * |bits>; repeated bitstrings accumulate.
  static Ket from_terms(int n, const std::vector<BasisTerm>& terms);

  int num_qubits() const { return n_; }
  Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Scalar amplitude(std::string_view bits) const;

  double norm() const { return amps_.norm(); }
  /// Throws ValidationError for the zero vector.
  Ket normalized() const;

  /// Nonzero (|a| > kElementTol) terms in index order.
  std::vector<BasisTerm> terms() const;

 private:
  int n_ = 0;
  Vector amps_;
};

Scalar inner_product(const Ket& a, const Ket& b);
Ket apply_pauli(const PauliOperator& p, const Ket& k);
Scalar matrix_element(const Ket& bra, const PauliOperator& p, const Ket& ket);

using Local = Eigen::Matrix2cd;

/// Single-qubit gates accepted by name in transform descriptions.
Local named_local(std::string_view name);

/// tau = Pi * (T_0 (x) ... (x) T_{n-1}): apply the locals, then move the
/// content of qubit q to position perm[q].
class CodeTransform {
 public:
  CodeTransform() = default;
  CodeTransform(std::vector<int> perm, std::vector<Local> locals);

  static CodeTransform identity(int n);
  static CodeTransform from_pauli(const PauliOperator& p);
  static CodeTransform permutation(std::vector<int> perm);
  /// perm[q] = q + shift mod n.
  static CodeTransform cyclic_shift(int n, int shift = 1);

  int num_qubits() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<Local>& locals() const { return locals_; }

  CodeTransform inverse() const;
  /// Every local equals a phase times one of I, X, Y, Z.
  bool is_pauli_type() const;
  /// The local layer as a Pauli (phases dropped) when is_pauli_type().
  std::optional<PauliOperator> local_pauli() const;

 private:
  std::vector<int> perm_;
  std::vector<Local> locals_;
};

/// `outer` after `inner`.
CodeTransform compose(const CodeTransform& outer, const CodeTransform& inner);

Ket apply_transform(const CodeTransform& t, const Ket& k);

/// factor * op, with op a phase-0 Pauli.
struct PauliImage {
  Scalar factor;
  PauliOperator op;
};

/// A unitary U on 2^n dimensions: either a structured pi*T transform or a
/// dense matrix.
class UnitaryAction {
 public:
  explicit UnitaryAction(CodeTransform t);
  explicit UnitaryAction(Matrix u);

  int num_qubits() const { return n_; }
  bool is_structured() const { return std::holds_alternative<CodeTransform>(rep_); }
  const CodeTransform* transform() const { return std::get_if<CodeTransform>(&rep_); }

  Ket apply(const Ket& k) const;
  Ket apply_adjoint(const Ket& k) const;
  Matrix dense() const;
  UnitaryAction adjoint() const;

  /// U P U^dagger, available for Pauli-type transforms.
  std::optional<PauliImage> conjugate(const PauliOperator& p) const;
  /// U P (resp. P U), available when U is a Pauli up to a global phase.
  std::optional<PauliImage> left_multiply(const PauliOperator& p) const;
  std::optional<PauliImage> right_multiply(const PauliOperator& p) const;

 private:
  int n_ = 0;
  std::variant<CodeTransform, Matrix> rep_;
  // U = pauli_phase_ * pauli_ when U is exactly a Pauli up to phase.
  std::optional<PauliOperator> pauli_;
  Scalar pauli_phase_ = 1.0;
};

UnitaryAction transform_to_unitary_action(const CodeTransform& t);

}  // namespace qunion
