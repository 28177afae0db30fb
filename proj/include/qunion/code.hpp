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

#include <string>
#include <vector>

#include "json.hpp"
#include "qunion/state.hpp"

namespace qunion {

/// Raw code input: basis vectors as amplitude/bitstring term lists.
struct CodeDescription {
  int n = 0;
  std::string label;
  std::vector<std::vector<BasisTerm>> basis;
};

/// A code subspace given by an orthonormal basis of K kets on N qubits.
class QuantumCode {
 public:
  QuantumCode() = default;
  /// Kets must already be orthonormal within kUnitaryTol.
  QuantumCode(std::vector<Ket> basis, std::string label);

  int n() const { return n_; }
  Index k() const { return static_cast<Index>(basis_.size()); }
  const std::vector<Ket>& basis() const { return basis_; }
  const Ket& operator[](Index i) const { return basis_[static_cast<std::size_t>(i)]; }
  const std::string& label() const { return label_; }

  /// 2^n x K matrix with the basis kets as columns.
  Matrix basis_matrix() const;

 private:
  int n_ = 0;
  std::vector<Ket> basis_;
  std::string label_;
};

/// Normalizes every vector and checks pairwise orthogonality; the error
/// message names the first offending pair.
QuantumCode ingest_code(const CodeDescription& desc);

QuantumCode transform_code(const QuantumCode& c, const CodeTransform& t);
QuantumCode transform_code(const QuantumCode& c, const UnitaryAction& u);

/// P = sum_i |c_i><c_i|.
Matrix code_projector(const QuantumCode& c);
/// Spectral-norm distance between the two code projectors.
double projector_distance(const QuantumCode& a, const QuantumCode& b);

// Example codes.

/// K=1 five-qubit code spanned by
/// |00000> - cyc|00011> + cyc|00101> - cyc|01111>.
QuantumCode fixture_rains_subcode();
/// The ((4,4,2)) code |0000>+|1111>, |0110>+|1001>, |0101>+|1010>, |1100>+|0011>.
QuantumCode fixture_gbp_code();
/// I (x) I (x) X (x) X (x) X.
CodeTransform rains_tau();
/// pi^shift tau, with pi the cyclic shift q -> q+1.
CodeTransform rains_orbit_transform(int shift);
/// The six mutually orthogonal components C0, pi^i tau C0 (i = 0..4).
std::vector<QuantumCode> rains_components();
/// I (x) I (x) I (x) Y.
CodeTransform gbp_tau();

// JSON formats.
CodeDescription code_description_from_json(const nlohmann::json& j);
nlohmann::json code_to_json(const QuantumCode& c);
/// { "perm": [...], "locals": ["I"|"X"|"Y"|"Z"|"H"|"S"|[[re,im] x 4], ...] },
/// both optional; `n` supplies the default size.
CodeTransform transform_from_json(const nlohmann::json& j, int n);
nlohmann::json transform_to_json(const CodeTransform& t);

}  // namespace qunion
