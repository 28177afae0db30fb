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

#include "qunion/pauli.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>

namespace qunion {
namespace {

constexpr Scalar kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int mod4(int k) { return ((k % 4) + 4) % 4; }

std::uint32_t low_bits(int n) {
  return n >= 32 ? 0xFFFFFFFFu : ((1u << n) - 1u);
}

// Phase exponent picked up by i^{popcount(x & z)} and (-1)^{popcount(b & z)}
// when a Pauli acts on basis state |b> (index-space masks).
int action_phase(int base, std::uint32_t b, std::uint32_t z_index) {
  return mod4(base + 2 * std::popcount(b & z_index));
}

}  // namespace

char to_char(PauliLetter p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

PauliOperator::PauliOperator(int n, std::uint32_t x_mask, std::uint32_t z_mask, int phase)
    : n_(n), x_(x_mask), z_(z_mask), phase_(mod4(phase)) {
  if (n < 0 || n > 32) throw ValidationError("Pauli qubit count out of range");
  if (((x_mask | z_mask) & ~low_bits(n)) != 0) {
    throw ValidationError("Pauli mask has bits beyond qubit count");
  }
}

PauliOperator PauliOperator::identity(int n) { return {n, 0, 0, 0}; }

PauliOperator PauliOperator::from_letters(std::span<const PauliLetter> letters) {
  if (letters.empty()) throw ValidationError("Pauli operator needs at least one letter");
  std::uint32_t x = 0, z = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const auto bit = 1u << q;
    switch (letters[q]) {
      case PauliLetter::I: break;
      case PauliLetter::X: x |= bit; break;
      case PauliLetter::Y: x |= bit; z |= bit; break;
      case PauliLetter::Z: z |= bit; break;
    }
  }
  return {static_cast<int>(letters.size()), x, z, 0};
}

PauliOperator PauliOperator::parse(std::string_view text) {
  int phase = 0;
  if (!text.empty() && text.front() == '-') {
    phase += 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase += 1;
    text.remove_prefix(1);
  }
  std::vector<PauliLetter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'I': letters.push_back(PauliLetter::I); break;
      case 'X': letters.push_back(PauliLetter::X); break;
      case 'Y': letters.push_back(PauliLetter::Y); break;
      case 'Z': letters.push_back(PauliLetter::Z); break;
      default:
        throw ValidationError(std::string("invalid Pauli letter '") + ch + "'");
    }
  }
  auto p = from_letters(letters);
  return {p.n_, p.x_, p.z_, phase};
}

Scalar PauliOperator::phase_factor() const { return kIPow[phase_]; }

PauliLetter PauliOperator::letter(int qubit) const {
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  if (x && z) return PauliLetter::Y;
  if (x) return PauliLetter::X;
  if (z) return PauliLetter::Z;
  return PauliLetter::I;
}

std::vector<PauliLetter> PauliOperator::letters() const {
  std::vector<PauliLetter> out(static_cast<std::size_t>(n_));
  for (int q = 0; q < n_; ++q) out[static_cast<std::size_t>(q)] = letter(q);
  return out;
}

int PauliOperator::weight() const { return std::popcount(x_ | z_); }

std::string PauliOperator::letters_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_));
  for (int q = 0; q < n_; ++q) s.push_back(to_char(letter(q)));
  return s;
}

std::string PauliOperator::to_string() const {
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  return kPrefix[phase_] + letters_string();
}

int weight(const PauliOperator& p) { return p.weight(); }

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw ValidationError("cannot multiply Paulis on different qubit counts");
  }
  // Per factor: (i^{x1 z1} X^x1 Z^z1)(i^{x2 z2} X^x2 Z^z2)
  //   = i^{x1 z1 + x2 z2 + 2 z1 x2 - x3 z3} (i^{x3 z3} X^x3 Z^z3).
  const auto x3 = a.x_mask() ^ b.x_mask();
  const auto z3 = a.z_mask() ^ b.z_mask();
  const int k = a.phase() + b.phase() + std::popcount(a.x_mask() & a.z_mask()) +
                std::popcount(b.x_mask() & b.z_mask()) +
                2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x3 & z3);
  return {a.num_qubits(), x3, z3, k};
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) { return multiply(a, b); }

PauliOperator dagger(const PauliOperator& p) {
  return {p.num_qubits(), p.x_mask(), p.z_mask(), -p.phase()};
}

bool anticommutes(const PauliOperator& a, const PauliOperator& b) {
  return (std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask())) % 2 == 1;
}

std::uint32_t to_index_mask(std::uint32_t mask, int n) {
  std::uint32_t out = 0;
  for (int q = 0; q < n; ++q) {
    if ((mask >> q) & 1u) out |= 1u << (n - 1 - q);
  }
  return out;
}

std::vector<PauliOperator> enumerate_paulis(int n, int max_weight) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count out of range");
  if (max_weight < 0 || max_weight > n) {
    throw ValidationError("max_weight must lie in [0, n]");
  }
  const std::uint32_t dim = 1u << n;
  std::vector<PauliOperator> out;
  for (int w = 0; w <= max_weight; ++w) {
    for (std::uint32_t x = 0; x < dim; ++x) {
      for (std::uint32_t z = 0; z < dim; ++z) {
        if (std::popcount(x | z) == w) out.emplace_back(n, x, z, 0);
      }
    }
  }
  return out;
}

Matrix dense(const PauliOperator& p) {
  const int n = p.num_qubits();
  const Index dim = Index{1} << n;
  const auto xi = to_index_mask(p.x_mask(), n);
  const auto zi = to_index_mask(p.z_mask(), n);
  const int base = p.phase() + std::popcount(p.x_mask() & p.z_mask());
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint32_t b = 0; b < dim; ++b) {
    m(b ^ xi, b) = kIPow[action_phase(base, b, zi)];
  }
  return m;
}

Scalar matrix_element(const Vector& bra, const PauliOperator& p, const Vector& ket) {
  const int n = p.num_qubits();
  const Index dim = Index{1} << n;
  if (bra.size() != dim || ket.size() != dim) {
    throw ValidationError("matrix_element: dimension mismatch");
  }
  const auto xi = to_index_mask(p.x_mask(), n);
  const auto zi = to_index_mask(p.z_mask(), n);
  const int base = p.phase() + std::popcount(p.x_mask() & p.z_mask());
  Scalar acc = 0;
  for (std::uint32_t b = 0; b < dim; ++b) {
    if (ket(b) == Scalar(0)) continue;
    acc += std::conj(bra(b ^ xi)) * kIPow[action_phase(base, b, zi)] * ket(b);
  }
  return acc;
}

Vector apply_pauli(const PauliOperator& p, const Vector& ket) {
  const int n = p.num_qubits();
  const Index dim = Index{1} << n;
  if (ket.size() != dim) throw ValidationError("apply_pauli: dimension mismatch");
  const auto xi = to_index_mask(p.x_mask(), n);
  const auto zi = to_index_mask(p.z_mask(), n);
  const int base = p.phase() + std::popcount(p.x_mask() & p.z_mask());
  Vector out(dim);
  for (std::uint32_t b = 0; b < dim; ++b) {
    out(b ^ xi) = kIPow[action_phase(base, b, zi)] * ket(b);
  }
  return out;
}

PauliBasis::PauliBasis(int n) : n_(n), ops_(enumerate_paulis(n, n)) {
  lookup_.assign(std::size_t{1} << (2 * n), -1);
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    lookup_[(std::size_t{ops_[k].x_mask()} << n) | ops_[k].z_mask()] = static_cast<Index>(k);
  }
}

Index PauliBasis::index_of(const PauliOperator& p) const {
  if (p.num_qubits() != n_) throw ValidationError("PauliBasis: qubit count mismatch");
  return lookup_[(std::size_t{p.x_mask()} << n_) | p.z_mask()];
}

Vector PauliBasis::coordinates(const PauliOperator& p) const {
  Vector e = Vector::Zero(size());
  e(index_of(p)) = p.phase_factor();
  return e;
}

Vector PauliBasis::coordinates(const Matrix& op) const {
  const Index dim = Index{1} << n_;
  if (op.rows() != dim || op.cols() != dim) {
    throw ValidationError("PauliBasis: operator dimension mismatch");
  }
  // tr(sigma E) = sum_b phase(b) E(b, b ^ x).
  Vector e(size());
  for (Index k = 0; k < size(); ++k) {
    const auto& s = (*this)[k];
    const auto xi = to_index_mask(s.x_mask(), n_);
    const auto zi = to_index_mask(s.z_mask(), n_);
    const int base = std::popcount(s.x_mask() & s.z_mask());
    Scalar acc = 0;
    for (std::uint32_t b = 0; b < dim; ++b) {
      acc += kIPow[action_phase(base, b, zi)] * op(b, b ^ xi);
    }
    e(k) = acc / static_cast<double>(dim);
  }
  return e;
}

Matrix PauliBasis::to_operator(const Vector& coords) const {
  if (coords.size() != size()) throw ValidationError("PauliBasis: coordinate length mismatch");
  const Index dim = Index{1} << n_;
  Matrix m = Matrix::Zero(dim, dim);
  for (Index k = 0; k < size(); ++k) {
    if (coords(k) == Scalar(0)) continue;
    const auto& s = (*this)[k];
    const auto xi = to_index_mask(s.x_mask(), n_);
    const auto zi = to_index_mask(s.z_mask(), n_);
    const int base = std::popcount(s.x_mask() & s.z_mask());
    for (std::uint32_t b = 0; b < dim; ++b) {
      m(b ^ xi, b) += coords(k) * kIPow[action_phase(base, b, zi)];
    }
  }
  return m;
}

const PauliBasis& pauli_basis(int n) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("qubit count out of range");
  static std::array<std::unique_ptr<PauliBasis>, kMaxQubits + 1> cache;
  static std::array<std::once_flag, kMaxQubits + 1> flags;
  std::call_once(flags[static_cast<std::size_t>(n)],
                 [n] { cache[static_cast<std::size_t>(n)] = std::make_unique<PauliBasis>(n); });
  return *cache[static_cast<std::size_t>(n)];
}

}  // namespace qunion
