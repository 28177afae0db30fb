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

#include "qunion/erasure.hpp"

#include <bit>
#include <cmath>

#include "qunion/linalg.hpp"

namespace qunion {
namespace {

Scalar pauli_trace_fraction(const PauliOperator& p) {
  return p.is_identity() ? p.phase_factor() : Scalar(0);
}

void check_dims(const QuantumCode& c, int n) {
  if (c.n() != n) throw ValidationError("operator and code have different qubit counts");
}

Scalar mean_diagonal(const Matrix& m) { return m.diagonal().mean(); }

MembershipReport erasure_report(const Matrix& m) {
  MembershipReport r{true, mean_diagonal(m), std::nullopt};
  const Index k = m.rows();
  for (Index i = 0; i < k && r.member; ++i) {
    for (Index j = 0; j < k; ++j) {
      if (i != j && std::abs(m(i, j)) > kElementTol) {
        r.member = false;
        r.witness = Witness{i, j, m(i, j)};
        break;
      }
    }
  }
  for (Index i = 1; i < k && r.member; ++i) {
    const Scalar diff = m(i, i) - m(0, 0);
    if (std::abs(diff) > kElementTol) {
      r.member = false;
      r.witness = Witness{i, i, diff};
    }
  }
  return r;
}

MembershipReport pure_report(const Matrix& m, Scalar trace_fraction) {
  MembershipReport r{true, mean_diagonal(m), std::nullopt};
  const Index k = m.rows();
  for (Index i = 0; i < k && r.member; ++i) {
    for (Index j = 0; j < k; ++j) {
      const Scalar dev = m(i, j) - (i == j ? trace_fraction : Scalar(0));
      if (std::abs(dev) > kElementTol) {
        r.member = false;
        r.witness = Witness{i, j, dev};
        break;
      }
    }
  }
  return r;
}

}  // namespace

Matrix code_matrix_elements(const QuantumCode& c, const PauliOperator& e) {
  check_dims(c, e.num_qubits());
  const Matrix b = c.basis_matrix();
  Matrix eb(b.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) eb.col(j) = apply_pauli(e, Vector(b.col(j)));
  return b.adjoint() * eb;
}

Matrix code_matrix_elements(const QuantumCode& c, const Matrix& e) {
  const Index dim = Index{1} << c.n();
  if (e.rows() != dim || e.cols() != dim) {
    throw ValidationError("operator and code have different dimensions");
  }
  const Matrix b = c.basis_matrix();
  return b.adjoint() * e * b;
}

MembershipReport check_erasure(const QuantumCode& c, const PauliOperator& e) {
  return erasure_report(code_matrix_elements(c, e));
}

MembershipReport check_erasure(const QuantumCode& c, const Matrix& e) {
  return erasure_report(code_matrix_elements(c, e));
}

MembershipReport check_pure(const QuantumCode& c, const PauliOperator& e) {
  return pure_report(code_matrix_elements(c, e), pauli_trace_fraction(e));
}

MembershipReport check_pure(const QuantumCode& c, const Matrix& e) {
  const Matrix m = code_matrix_elements(c, e);
  return pure_report(m, e.trace() / static_cast<double>(e.rows()));
}

Matrix element_table(const QuantumCode& c) {
  const PauliBasis& paulis = pauli_basis(c.n());
  const Index k = c.k();
  const Matrix b = c.basis_matrix();
  Matrix table(k * k, paulis.size());
  Matrix sb(b.rows(), k);
  for (Index s = 0; s < paulis.size(); ++s) {
    for (Index j = 0; j < k; ++j) sb.col(j) = apply_pauli(paulis[s], Vector(b.col(j)));
    const Matrix m = b.adjoint() * sb;
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) table(i * k + j, s) = m(i, j);
    }
  }
  return table;
}

Matrix erasure_constraints(const QuantumCode& c) {
  const Matrix t = element_table(c);
  const Index k = c.k();
  Matrix rows(k * (k - 1) + (k - 1), t.cols());
  Index r = 0;
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      if (i != j) rows.row(r++) = t.row(i * k + j);
    }
  }
  for (Index i = 1; i < k; ++i) rows.row(r++) = t.row(i * k + i) - t.row(0);
  return rows;
}

Matrix pure_constraints(const QuantumCode& c) {
  Matrix rows = element_table(c);
  // Only the identity (coordinate 0) has nonzero trace.
  for (Index i = 0; i < c.k(); ++i) rows(i * c.k() + i, 0) -= 1.0;
  return rows;
}

Matrix annihilator_constraints(const QuantumCode& c) { return element_table(c); }

OperatorSubspace erasure_space(const QuantumCode& c) {
  return OperatorSubspace::from_constraints(c.n(), erasure_constraints(c));
}

OperatorSubspace pure_erasure_space(const QuantumCode& c) {
  return OperatorSubspace::from_constraints(c.n(), pure_constraints(c));
}

OperatorSubspace annihilator_space(const QuantumCode& c) {
  return OperatorSubspace::from_constraints(c.n(), annihilator_constraints(c));
}

Classification classify_paulis(const QuantumCode& c, int max_weight, Condition cond) {
  Classification out;
  out.condition = cond;
  for (int w = 0; w <= max_weight; ++w) out.per_weight.push_back({w, 0, 0, {}});
  for (const auto& p : enumerate_paulis(c.n(), max_weight)) {
    const auto r = cond == Condition::kErasure ? check_erasure(c, p) : check_pure(c, p);
    auto& cls = out.per_weight[static_cast<std::size_t>(p.weight())];
    if (r.member) {
      ++cls.members;
    } else {
      ++cls.non_members;
      cls.violators.push_back({p, *r.witness});
    }
  }
  return out;
}

namespace {

template <typename Check>
Distance first_failure(const QuantumCode& c, Check&& check) {
  for (const auto& p : enumerate_paulis(c.n(), c.n())) {
    if (!check(c, p).member) return {p.weight(), false};
  }
  return {c.n() + 1, true};
}

}  // namespace

Distance minimum_distance(const QuantumCode& c) {
  return first_failure(c, [](const QuantumCode& cc, const PauliOperator& p) {
    return check_erasure(cc, p);
  });
}

Distance pure_distance(const QuantumCode& c) {
  return first_failure(c, [](const QuantumCode& cc, const PauliOperator& p) {
    return check_pure(cc, p);
  });
}

Vector adjoint_coordinates(const Vector& e) { return e.conjugate(); }

Matrix hermitian_basis(int n, const Matrix& spanning) {
  const Index m = spanning.rows();
  if (m != (Index{1} << (2 * n))) throw ValidationError("hermitian_basis: vector length mismatch");
  const Matrix range = linalg::orthonormal_range(spanning, kRankTol);
  const Index d = range.cols();
  // The adjoint conjugates coordinates; the span must map into itself.
  const Matrix conj = spanning.conjugate();
  for (Index k = 0; k < conj.cols(); ++k) {
    const double nrm = conj.col(k).norm();
    if (nrm == 0.0) continue;
    const double res = (conj.col(k) - range * (range.adjoint() * conj.col(k))).norm() / nrm;
    if (res > kResidualTol) throw ValidationError("subspace is not closed under adjoint");
  }

  Eigen::MatrixXd kept(m, d);
  std::vector<bool> anti;
  Index count = 0;
  auto offer = [&](Eigen::VectorXd u, bool is_anti) {
    const double orig = u.norm();
    if (orig < kElementTol || count == d) return;
    for (int pass = 0; pass < 2; ++pass) {
      u -= kept.leftCols(count) * (kept.leftCols(count).transpose() * u);
    }
    const double nrm = u.norm();
    if (nrm > 1e-6 * orig) {
      kept.col(count++) = u / nrm;
      anti.push_back(is_anti);
    }
  };
  for (Index k = 0; k < spanning.cols(); ++k) {
    offer(spanning.col(k).real(), false);  // (E + E^dagger) / 2
    offer(spanning.col(k).imag(), true);   // (E - E^dagger) / 2i
  }
  if (count != d) throw InternalError("hermitian_basis lost rank");

  Matrix out(m, d);
  for (Index k = 0; k < d; ++k) {
    out.col(k) = kept.col(k).cast<Scalar>();
    if (anti[static_cast<std::size_t>(k)]) out.col(k) *= Scalar(0, 1);
  }
  return out;
}

Matrix hermitian_basis(const OperatorSubspace& s) { return hermitian_basis(s.num_qubits(), s.basis()); }

int operator_weight(const Vector& e, int n) {
  const PauliBasis& paulis = pauli_basis(n);
  if (e.size() != paulis.size()) throw ValidationError("operator_weight: length mismatch");
  std::uint32_t support = 0;
  for (Index k = 0; k < e.size(); ++k) {
    if (std::abs(e(k)) > kElementTol) support |= paulis[k].x_mask() | paulis[k].z_mask();
  }
  return std::popcount(support);
}

}  // namespace qunion
