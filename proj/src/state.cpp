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

#include "qunion/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qunion {
namespace {

Index parse_bits(std::string_view bits) {
  Index idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw ValidationError("bitstring '" + std::string(bits) + "' has characters other than 0/1");
    }
    idx = (idx << 1) | (ch == '1' ? 1 : 0);
  }
  return idx;
}

std::string format_bits(Index idx, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((idx >> (n - 1 - q)) & 1) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

const Local& letter_matrix(PauliLetter p) {
  static const Local kI = Local::Identity();
  static const Local kX = (Local() << 0, 1, 1, 0).finished();
  static const Local kY = (Local() << 0, Scalar(0, -1), Scalar(0, 1), 0).finished();
  static const Local kZ = (Local() << 1, 0, 0, -1).finished();
  switch (p) {
    case PauliLetter::X: return kX;
    case PauliLetter::Y: return kY;
    case PauliLetter::Z: return kZ;
    default: return kI;
  }
}

struct LocalPauli {
  PauliLetter letter;
  Scalar phase;
};

std::optional<LocalPauli> as_local_pauli(const Local& m) {
  for (auto p : {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
    const Local& l = letter_matrix(p);
    const Scalar c = (l.adjoint() * m).trace() / 2.0;
    if (std::abs(std::abs(c) - 1.0) < kUnitaryTol && (m - c * l).norm() < kUnitaryTol) {
      return LocalPauli{p, c};
    }
  }
  return std::nullopt;
}

// Applies a 2x2 matrix to one qubit in place.
void apply_local(Vector& amps, int n, int qubit, const Local& m) {
  const Index dim = amps.size();
  const Index bit = Index{1} << (n - 1 - qubit);
  for (Index b = 0; b < dim; ++b) {
    if (b & bit) continue;
    const Scalar a0 = amps(b);
    const Scalar a1 = amps(b | bit);
    amps(b) = m(0, 0) * a0 + m(0, 1) * a1;
    amps(b | bit) = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

Index permute_index(Index b, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Index out = 0;
  for (int q = 0; q < n; ++q) {
    if ((b >> (n - 1 - q)) & 1) out |= Index{1} << (n - 1 - perm[static_cast<std::size_t>(q)]);
  }
  return out;
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t q = 0; q < perm.size(); ++q) {
    if ((mask >> q) & 1u) out |= 1u << perm[q];
  }
  return out;
}

}  // namespace

Ket::Ket(int n, Vector amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count out of range");
  if (amps_.size() != (Index{1} << n)) {
    throw ValidationError("ket length must be 2^n");
  }
}

Ket Ket::basis_state(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  Vector v = Vector::Zero(Index{1} << n);
  v(parse_bits(bits)) = 1.0;
  return {n, std::move(v)};
}

Ket Ket::from_terms(int n, const std::vector<BasisTerm>& terms) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count out of range");
  Vector v = Vector::Zero(Index{1} << n);
  for (const auto& t : terms) {
    if (static_cast<int>(t.bits.size()) != n) {
      throw ValidationError("bitstring '" + t.bits + "' does not have length " + std::to_string(n));
    }
    v(parse_bits(t.bits)) += t.amplitude;
  }
  return {n, std::move(v)};
}

Scalar Ket::amplitude(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != n_) throw ValidationError("bitstring length mismatch");
  return amps_(parse_bits(bits));
}

Ket Ket::normalized() const {
  const double nrm = norm();
  if (nrm < kUnitaryTol) throw ValidationError("cannot normalize the zero vector");
  return {n_, amps_ / nrm};
}

std::vector<BasisTerm> Ket::terms() const {
  std::vector<BasisTerm> out;
  for (Index b = 0; b < dim(); ++b) {
    if (std::abs(amps_(b)) > kElementTol) out.push_back({amps_(b), format_bits(b, n_)});
  }
  return out;
}

Scalar inner_product(const Ket& a, const Ket& b) {
  if (a.num_qubits() != b.num_qubits()) throw ValidationError("inner_product: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

Ket apply_pauli(const PauliOperator& p, const Ket& k) {
  if (p.num_qubits() != k.num_qubits()) throw ValidationError("apply_pauli: dimension mismatch");
  return {k.num_qubits(), apply_pauli(p, k.amplitudes())};
}

Scalar matrix_element(const Ket& bra, const PauliOperator& p, const Ket& ket) {
  return matrix_element(bra.amplitudes(), p, ket.amplitudes());
}

Local named_local(std::string_view name) {
  if (name == "I") return letter_matrix(PauliLetter::I);
  if (name == "X") return letter_matrix(PauliLetter::X);
  if (name == "Y") return letter_matrix(PauliLetter::Y);
  if (name == "Z") return letter_matrix(PauliLetter::Z);
  if (name == "H") return (Local() << 1, 1, 1, -1).finished() / std::sqrt(2.0);
  if (name == "S") return (Local() << 1, 0, 0, Scalar(0, 1)).finished();
  throw ValidationError("unknown local gate '" + std::string(name) + "'");
}

CodeTransform::CodeTransform(std::vector<int> perm, std::vector<Local> locals)
    : perm_(std::move(perm)), locals_(std::move(locals)) {
  const int n = static_cast<int>(perm_.size());
  if (n < 1 || n > kMaxQubits) throw ValidationError("transform qubit count out of range");
  if (static_cast<int>(locals_.size()) != n) {
    throw ValidationError("transform needs one local per qubit");
  }
  std::vector<int> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (int q = 0; q < n; ++q) {
    if (sorted[static_cast<std::size_t>(q)] != q) {
      throw ValidationError("perm is not a permutation of 0..n-1");
    }
  }
  for (std::size_t q = 0; q < locals_.size(); ++q) {
    const Local& m = locals_[q];
    if ((m * m.adjoint() - Local::Identity()).norm() > kUnitaryTol) {
      throw ValidationError("local " + std::to_string(q) + " is not unitary");
    }
  }
}

CodeTransform CodeTransform::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return {std::move(perm), std::vector<Local>(static_cast<std::size_t>(n), Local::Identity())};
}

CodeTransform CodeTransform::from_pauli(const PauliOperator& p) {
  auto t = identity(p.num_qubits());
  for (int q = 0; q < p.num_qubits(); ++q) {
    t.locals_[static_cast<std::size_t>(q)] = letter_matrix(p.letter(q));
  }
  t.locals_[0] *= p.phase_factor();
  return t;
}

CodeTransform CodeTransform::permutation(std::vector<int> perm) {
  const auto n = perm.size();
  return {std::move(perm), std::vector<Local>(n, Local::Identity())};
}

CodeTransform CodeTransform::cyclic_shift(int n, int shift) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) perm[static_cast<std::size_t>(q)] = (((q + shift) % n) + n) % n;
  return permutation(std::move(perm));
}

CodeTransform CodeTransform::inverse() const {
  // (Pi T)^dagger = T^dagger Pi^-1 = Pi^-1 (Pi T^dagger Pi^-1).
  const auto n = perm_.size();
  std::vector<int> inv(n);
  std::vector<Local> locals(n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto dst = static_cast<std::size_t>(perm_[q]);
    inv[dst] = static_cast<int>(q);
    locals[dst] = locals_[q].adjoint();
  }
  return {std::move(inv), std::move(locals)};
}

bool CodeTransform::is_pauli_type() const {
  return std::all_of(locals_.begin(), locals_.end(),
                     [](const Local& m) { return as_local_pauli(m).has_value(); });
}

std::optional<PauliOperator> CodeTransform::local_pauli() const {
  std::vector<PauliLetter> letters;
  for (const auto& m : locals_) {
    auto lp = as_local_pauli(m);
    if (!lp) return std::nullopt;
    letters.push_back(lp->letter);
  }
  return PauliOperator::from_letters(letters);
}

CodeTransform compose(const CodeTransform& outer, const CodeTransform& inner) {
  // Pi2 T2 Pi1 T1 = Pi2 Pi1 (Pi1^-1 T2 Pi1) T1; factor at position perm1[q]
  // of T2 lands on qubit q.
  const int n = inner.num_qubits();
  if (outer.num_qubits() != n) throw ValidationError("compose: qubit count mismatch");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<Local> locals(static_cast<std::size_t>(n));
  for (std::size_t q = 0; q < perm.size(); ++q) {
    const auto mid = static_cast<std::size_t>(inner.perm()[q]);
    perm[q] = outer.perm()[mid];
    locals[q] = outer.locals()[mid] * inner.locals()[q];
  }
  return {std::move(perm), std::move(locals)};
}

Ket apply_transform(const CodeTransform& t, const Ket& k) {
  const int n = k.num_qubits();
  if (t.num_qubits() != n) throw ValidationError("apply_transform: dimension mismatch");
  Vector amps = k.amplitudes();
  for (int q = 0; q < n; ++q) {
    const Local& m = t.locals()[static_cast<std::size_t>(q)];
    if (m != Local::Identity()) apply_local(amps, n, q, m);
  }
  Vector out(amps.size());
  for (Index b = 0; b < amps.size(); ++b) out(permute_index(b, t.perm())) = amps(b);
  return {n, std::move(out)};
}

UnitaryAction::UnitaryAction(CodeTransform t) : n_(t.num_qubits()) {
  const auto& perm = t.perm();
  const bool identity_perm = std::is_sorted(perm.begin(), perm.end());
  if (identity_perm) {
    std::vector<PauliLetter> letters;
    Scalar phase = 1.0;
    bool ok = true;
    for (const auto& m : t.locals()) {
      auto lp = as_local_pauli(m);
      if (!lp) {
        ok = false;
        break;
      }
      letters.push_back(lp->letter);
      phase *= lp->phase;
    }
    if (ok) {
      pauli_ = PauliOperator::from_letters(letters);
      pauli_phase_ = phase;
    }
  }
  rep_ = std::move(t);
}

UnitaryAction::UnitaryAction(Matrix u) {
  const Index dim = u.rows();
  if (dim != u.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("unitary must be square with power-of-two size");
  }
  if ((u * u.adjoint() - Matrix::Identity(dim, dim)).norm() > kUnitaryTol * static_cast<double>(dim)) {
    throw ValidationError("matrix is not unitary");
  }
  while ((Index{1} << n_) < dim) ++n_;
  rep_ = std::move(u);
}

Ket UnitaryAction::apply(const Ket& k) const {
  if (k.num_qubits() != n_) throw ValidationError("UnitaryAction: dimension mismatch");
  if (auto t = transform()) return apply_transform(*t, k);
  return {n_, std::get<Matrix>(rep_) * k.amplitudes()};
}

Ket UnitaryAction::apply_adjoint(const Ket& k) const {
  if (k.num_qubits() != n_) throw ValidationError("UnitaryAction: dimension mismatch");
  if (auto t = transform()) return apply_transform(t->inverse(), k);
  return {n_, std::get<Matrix>(rep_).adjoint() * k.amplitudes()};
}

Matrix UnitaryAction::dense() const {
  if (!is_structured()) return std::get<Matrix>(rep_);
  const Index dim = Index{1} << n_;
  Matrix u(dim, dim);
  for (Index b = 0; b < dim; ++b) {
    Vector e = Vector::Zero(dim);
    e(b) = 1.0;
    u.col(b) = apply(Ket(n_, std::move(e))).amplitudes();
  }
  return u;
}

UnitaryAction UnitaryAction::adjoint() const {
  if (auto t = transform()) return UnitaryAction(t->inverse());
  return UnitaryAction(Matrix(std::get<Matrix>(rep_).adjoint()));
}

std::optional<PauliImage> UnitaryAction::conjugate(const PauliOperator& p) const {
  const auto* t = transform();
  if (t == nullptr) return std::nullopt;
  auto q = t->local_pauli();
  if (!q) return std::nullopt;
  // Local phases cancel in T P T^dagger.
  const double sign = anticommutes(*q, p) ? -1.0 : 1.0;
  PauliOperator moved(n_, permute_mask(p.x_mask(), t->perm()), permute_mask(p.z_mask(), t->perm()));
  return PauliImage{sign * p.phase_factor(), moved};
}

std::optional<PauliImage> UnitaryAction::left_multiply(const PauliOperator& p) const {
  if (!pauli_) return std::nullopt;
  const auto prod = multiply(*pauli_, p);
  return PauliImage{pauli_phase_ * prod.phase_factor(), prod.unsigned_part()};
}

std::optional<PauliImage> UnitaryAction::right_multiply(const PauliOperator& p) const {
  if (!pauli_) return std::nullopt;
  const auto prod = multiply(p, *pauli_);
  return PauliImage{pauli_phase_ * prod.phase_factor(), prod.unsigned_part()};
}

UnitaryAction transform_to_unitary_action(const CodeTransform& t) { return UnitaryAction(t); }

}  // namespace qunion
