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

#include "qunion/union.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qunion {
namespace {

enum class MapKind { kConjugate, kLeft, kRight };

using CoordinateMap = std::function<Vector(const Vector&)>;

std::optional<PauliImage> symbolic_image(const UnitaryAction& u, MapKind kind,
                                         const PauliOperator& p) {
  switch (kind) {
    case MapKind::kConjugate: return u.conjugate(p);
    case MapKind::kLeft: return u.left_multiply(p);
    case MapKind::kRight: return u.right_multiply(p);
  }
  return std::nullopt;
}

CoordinateMap make_map(const UnitaryAction& u, MapKind kind) {
  const int n = u.num_qubits();
  const PauliBasis& paulis = pauli_basis(n);
  if (symbolic_image(u, kind, PauliOperator::identity(n))) {
    // Signed permutation of Pauli coordinates.
    std::vector<Index> target(static_cast<std::size_t>(paulis.size()));
    std::vector<Scalar> factor(target.size());
    for (Index k = 0; k < paulis.size(); ++k) {
      const auto img = *symbolic_image(u, kind, paulis[k]);
      target[static_cast<std::size_t>(k)] = paulis.index_of(img.op);
      factor[static_cast<std::size_t>(k)] = img.factor;
    }
    return [target, factor](const Vector& e) {
      Vector out = Vector::Zero(e.size());
      for (Index k = 0; k < e.size(); ++k) {
        out(target[static_cast<std::size_t>(k)]) += factor[static_cast<std::size_t>(k)] * e(k);
      }
      return out;
    };
  }
  const Matrix dense_u = u.dense();
  return [&paulis, dense_u, kind](const Vector& e) {
    const Matrix op = paulis.to_operator(e);
    Matrix mapped;
    switch (kind) {
      case MapKind::kConjugate: mapped = dense_u * op * dense_u.adjoint(); break;
      case MapKind::kLeft: mapped = dense_u * op; break;
      case MapKind::kRight: mapped = op * dense_u; break;
    }
    return paulis.coordinates(mapped);
  };
}

void check_sizes(const OperatorSubspace& s, const UnitaryAction& u) {
  if (s.num_qubits() != u.num_qubits()) {
    throw ValidationError("subspace and unitary act on different qubit counts");
  }
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += " + ";
    out += labels[i];
  }
  return out;
}

PauliOperator rotate(const PauliOperator& p, int shift) {
  const int n = p.num_qubits();
  std::uint32_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const int dst = (q + shift) % n;
    if ((p.x_mask() >> q) & 1u) x |= 1u << dst;
    if ((p.z_mask() >> q) & 1u) z |= 1u << dst;
  }
  return {n, x, z, p.phase()};
}

std::vector<PauliOperator> sorted_unique(std::vector<PauliOperator> ops) {
  auto key = [](const PauliOperator& p) {
    return std::tuple(p.weight(), p.x_mask(), p.z_mask());
  };
  std::sort(ops.begin(), ops.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  return ops;
}

UnionResult require_orthogonal_union(const QuantumCode& c, const UnitaryAction& u) {
  const QuantumCode image = transform_code(c, u);
  return union_code(c, image);
}

OperatorSubspace erasure_formula_with(const QuantumCode& c, const UnitaryAction& u, Index which) {
  const UnitaryAction ud = u.adjoint();
  const OperatorSubspace e = erasure_space(c);
  const OperatorSubspace ann = annihilator_space(c);
  const OperatorSubspace parts[] = {
      e,
      conjugate_subspace(e, u),
      right_multiply_subspace(ann, ud),
      left_multiply_subspace(ann, u),
      m_space(c, u, which),
  };
  return intersect(parts);
}

}  // namespace

UnionResult union_code(std::span<const QuantumCode> codes, std::string label) {
  if (codes.size() < 2) throw ValidationError("a union needs at least two codes");
  UnionBuildReport report;
  report.n = codes.front().n();
  std::vector<Ket> basis;
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < codes.size(); ++c) {
    const auto& code = codes[c];
    if (code.n() != report.n) throw ValidationError("union components have different lengths");
    report.component_labels.push_back(code.label());
    // Iterated binary union: each new component against everything so far.
    for (Index j = 0; j < code.k(); ++j) {
      for (std::size_t prev = 0; prev < basis.size(); ++prev) {
        const double ov = std::abs(inner_product(basis[prev], code[j]));
        report.max_cross_overlap = std::max(report.max_cross_overlap, ov);
        if (ov >= kElementTol) {
          std::ostringstream msg;
          msg << "components " << owner[prev] << " and " << c << " are not orthogonal (basis "
              << prev << " vs component " << c << " vector " << j << ", |overlap| = " << ov << ")";
          throw ValidationError(msg.str());
        }
      }
    }
    for (const auto& k : code.basis()) {
      basis.push_back(k);
      owner.push_back(c);
    }
  }
  report.k = static_cast<Index>(basis.size());
  if (label.empty()) label = join_labels(report.component_labels);
  return {QuantumCode(std::move(basis), std::move(label)), std::move(report)};
}

UnionResult union_code(const QuantumCode& a, const QuantumCode& b, std::string label) {
  const QuantumCode both[] = {a, b};
  return union_code(both, std::move(label));
}

Vector conjugate_coordinates(const Vector& e, const UnitaryAction& u) {
  return make_map(u, MapKind::kConjugate)(e);
}

Vector left_multiply_coordinates(const Vector& e, const UnitaryAction& u) {
  return make_map(u, MapKind::kLeft)(e);
}

Vector right_multiply_coordinates(const Vector& e, const UnitaryAction& v) {
  return make_map(v, MapKind::kRight)(e);
}

OperatorSubspace conjugate_subspace(const OperatorSubspace& s, const UnitaryAction& u) {
  check_sizes(s, u);
  return s.mapped(make_map(u, MapKind::kConjugate));
}

OperatorSubspace left_multiply_subspace(const OperatorSubspace& s, const UnitaryAction& u) {
  check_sizes(s, u);
  return s.mapped(make_map(u, MapKind::kLeft));
}

OperatorSubspace right_multiply_subspace(const OperatorSubspace& s, const UnitaryAction& v) {
  check_sizes(s, v);
  return s.mapped(make_map(v, MapKind::kRight));
}

OperatorSubspace m_space(const QuantumCode& c, const UnitaryAction& u, Index which) {
  if (u.num_qubits() != c.n()) throw ValidationError("m_space: dimension mismatch");
  if (which < 0 || which >= c.k()) throw ValidationError("m_space: basis index out of range");
  // <c|U^dagger sigma U|c> = <Uc|sigma|Uc>.
  const Ket& ket = c[which];
  const Ket image = u.apply(ket);
  const PauliBasis& paulis = pauli_basis(c.n());
  Matrix row(1, paulis.size());
  for (Index s = 0; s < paulis.size(); ++s) {
    row(0, s) = matrix_element(ket, paulis[s], ket) - matrix_element(image, paulis[s], image);
  }
  return OperatorSubspace::from_constraints(c.n(), row);
}

OperatorSubspace union_erasure_space_formula(const QuantumCode& c, const UnitaryAction& u) {
  require_orthogonal_union(c, u);
  return erasure_formula_with(c, u, 0);
}

OperatorSubspace union_pure_space_formula(const QuantumCode& c, const UnitaryAction& u) {
  require_orthogonal_union(c, u);
  const UnitaryAction ud = u.adjoint();
  const OperatorSubspace pure = pure_erasure_space(c);
  const OperatorSubspace ann = annihilator_space(c);
  const OperatorSubspace parts[] = {
      pure,
      conjugate_subspace(pure, u),
      right_multiply_subspace(ann, ud),
      left_multiply_subspace(ann, u),
  };
  return intersect(parts);
}

OperatorSubspace pure_space_trace_variant(const QuantumCode& c, const UnitaryAction& u) {
  require_orthogonal_union(c, u);
  const UnitaryAction ud = u.adjoint();
  const OperatorSubspace pure = pure_erasure_space(c);
  const OperatorSubspace parts[] = {
      pure,
      conjugate_subspace(pure, u),
      right_multiply_subspace(pure, ud),
      left_multiply_subspace(pure, u),
  };
  return intersect(parts);
}

FormulaCheck check_union_erasure_formula(const QuantumCode& c, const UnitaryAction& u) {
  const UnionResult uni = require_orthogonal_union(c, u);
  const OperatorSubspace via = erasure_formula_with(c, u, 0);
  const OperatorSubspace direct = erasure_space(uni.code);
  FormulaCheck out;
  out.dim = via.dim();
  out.direct_dim = direct.dim();
  out.residual = subspace_distance(via, direct);
  out.matches_direct = out.dim == out.direct_dim && out.residual < kResidualTol;
  for (Index i = 1; i < c.k(); ++i) {
    out.m_space_spread = std::max(out.m_space_spread, subspace_distance(via, erasure_formula_with(c, u, i)));
  }
  return out;
}

FormulaCheck check_union_pure_formula(const QuantumCode& c, const UnitaryAction& u) {
  const UnionResult uni = require_orthogonal_union(c, u);
  const OperatorSubspace via = union_pure_space_formula(c, u);
  const OperatorSubspace direct = pure_erasure_space(uni.code);
  FormulaCheck out;
  out.dim = via.dim();
  out.direct_dim = direct.dim();
  out.residual = subspace_distance(via, direct);
  out.matches_direct = out.dim == out.direct_dim && out.residual < kResidualTol;
  return out;
}

std::vector<PauliOperator> shifted_products(const PauliOperator& e, const PauliOperator& tau,
                                            bool left) {
  const int n = e.num_qubits();
  std::vector<PauliOperator> out;
  for (int j = 0; j < n; ++j) {
    const PauliOperator ej = rotate(e, j);
    const PauliOperator prod = left ? tau * ej : ej * tau;
    for (int i = 0; i < n; ++i) out.push_back(rotate(prod, i).unsigned_part());
  }
  return sorted_unique(std::move(out));
}

std::vector<PauliOperator> cyclic_shifts(const PauliOperator& p) {
  std::vector<PauliOperator> out;
  for (int i = 0; i < p.num_qubits(); ++i) out.push_back(rotate(p, i).unsigned_part());
  return sorted_unique(std::move(out));
}

}  // namespace qunion
