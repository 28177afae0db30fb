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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qunion/types.hpp"

namespace qunion {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char to_char(PauliLetter p);

/// An N-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{N-1}.
///
/// Bit q of `x_mask` / `z_mask` describes tensor factor q (the leftmost
/// factor is q = 0). Y is stored with both bits set and phase 0, and realizes
/// the usual [[0,-i],[i,0]].
class PauliOperator {
 public:
  PauliOperator() = default;
  PauliOperator(int n, std::uint32_t x_mask, std::uint32_t z_mask, int phase = 0);

  static PauliOperator identity(int n);
  static PauliOperator from_letters(std::span<const PauliLetter> letters);
  /// Parses strings like "IIYZY", "-XZ", "iY", "-iZZ".
  static PauliOperator parse(std::string_view text);

  int num_qubits() const { return n_; }
  std::uint32_t x_mask() const { return x_; }
  std::uint32_t z_mask() const { return z_; }
  int phase() const { return phase_; }
  Scalar phase_factor() const;

  PauliLetter letter(int qubit) const;
  std::vector<PauliLetter> letters() const;
  int weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }

  /// Same letters with phase 0.
  PauliOperator unsigned_part() const { return {n_, x_, z_, 0}; }
  /// Letters only, e.g. "IXYZI".
  std::string letters_string() const;
  /// Phase prefix from {"", "i", "-", "-i"} followed by the letters.
  std::string to_string() const;

  bool operator==(const PauliOperator&) const = default;

 private:
  int n_ = 0;
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
  int phase_ = 0;
};

int weight(const PauliOperator& p);
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
PauliOperator dagger(const PauliOperator& p);
bool anticommutes(const PauliOperator& a, const PauliOperator& b);

/// Reverses the low n bits: maps a factor-indexed mask to a basis-state mask
/// (factor 0 is the most significant bit of a basis-state index).
std::uint32_t to_index_mask(std::uint32_t mask, int n);

/// All phase-0 operators of weight <= max_weight, by ascending weight, then
/// x_mask, then z_mask.
std::vector<PauliOperator> enumerate_paulis(int n, int max_weight);

/// Dense 2^n x 2^n realization.
Matrix dense(const PauliOperator& p);

/// <bra|P|ket> in O(2^n) without forming the matrix.
Scalar matrix_element(const Vector& bra, const PauliOperator& p, const Vector& ket);

/// P|ket> in O(2^n).
Vector apply_pauli(const PauliOperator& p, const Vector& ket);

/// Coordinate system over the 4^n phase-0 Paulis, in enumeration order.
/// An operator E has coordinates e with E = sum_k e_k * sigma_k.
class PauliBasis {
 public:
  explicit PauliBasis(int n);

  int num_qubits() const { return n_; }
  Index size() const { return static_cast<Index>(ops_.size()); }
  const std::vector<PauliOperator>& operators() const { return ops_; }
  const PauliOperator& operator[](Index k) const { return ops_[static_cast<std::size_t>(k)]; }

  /// Coordinate index of the unsigned part of p.
  Index index_of(const PauliOperator& p) const;

  /// Coordinates of p itself (a phase times a unit vector).
  Vector coordinates(const PauliOperator& p) const;
  /// e_k = tr(sigma_k E) / 2^n.
  Vector coordinates(const Matrix& op) const;
  Matrix to_operator(const Vector& coords) const;

 private:
  int n_;
  std::vector<PauliOperator> ops_;
  std::vector<Index> lookup_;  // (x << n | z) -> coordinate
};

/// Shared basis for n qubits; built once per n.
const PauliBasis& pauli_basis(int n);

}  // namespace qunion
