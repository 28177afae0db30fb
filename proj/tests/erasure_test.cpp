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

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qunion/code.hpp"

using namespace qunion;

namespace {

QuantumCode random_code(int n, Index k, std::mt19937& rng) {
  const Matrix f = oracle::random_frame(Index{1} << n, k, rng);
  std::vector<Ket> kets;
  for (Index j = 0; j < k; ++j) kets.emplace_back(n, Vector(f.col(j)));
  return QuantumCode(std::move(kets), "random");
}

// Dense operator from Pauli coordinates, using Kronecker products of letters.
Matrix dense_from_coordinates(const Vector& e, int n) {
  const PauliBasis& paulis = pauli_basis(n);
  Matrix out = Matrix::Zero(Index{1} << n, Index{1} << n);
  for (Index s = 0; s < e.size(); ++s) {
    if (e(s) != Scalar(0)) out += e(s) * oracle::kron_pauli(paulis[s].letters_string());
  }
  return out;
}

// Constraint matrix built from dense Pauli matrices; column order is that of
// all_letter_strings, which need not match the library's enumeration.
Matrix dense_constraints(const QuantumCode& c, bool pure) {
  const Matrix b = c.basis_matrix();
  const auto strings = oracle::all_letter_strings(c.n());
  const Index k = c.k();
  Matrix rows(k * k, static_cast<Index>(strings.size()));
  for (std::size_t s = 0; s < strings.size(); ++s) {
    const Matrix m = b.adjoint() * oracle::kron_pauli(strings[s]) * b;
    const bool is_identity = oracle::letter_weight(strings[s]) == 0;
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) {
        Scalar v = m(i, j);
        if (pure) {
          if (i == j && is_identity) v -= 1.0;
        } else if (i == j) {
          v -= m(0, 0);
        }
        rows(i * k + j, static_cast<Index>(s)) = v;
      }
    }
  }
  return rows;
}

Index oracle_dim(const QuantumCode& c, bool pure) {
  return (Index{1} << (2 * c.n())) - oracle::rank(dense_constraints(c, pure));
}

QuantumCode zero_state() { return ingest_code({5, "zero", {{{1.0, "00000"}}}}); }

}  // namespace

TEST(erasure, IdentityIsMember) {
  for (const auto& c : {fixture_gbp_code(), fixture_rains_subcode()}) {
    const auto r = check_erasure(c, PauliOperator::identity(c.n()));
    EXPECT_TRUE(r.member);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_NEAR(std::abs(r.alpha - Scalar(1)), 0.0, 1e-12);
    EXPECT_TRUE(check_pure(c, PauliOperator::identity(c.n())).member);
  }
}

TEST(erasure, SingleKetAlwaysMember) {
  std::mt19937 rng(1);
  const QuantumCode c = random_code(3, 1, rng);
  for (const auto& p : enumerate_paulis(3, 3)) EXPECT_TRUE(check_erasure(c, p).member);
  EXPECT_EQ(erasure_space(c).dim(), 64);
  const Distance d = minimum_distance(c);
  EXPECT_EQ(d.value, 4);
  EXPECT_TRUE(d.degenerate);
}

TEST(erasure, WitnessReported) {
  const QuantumCode c = fixture_gbp_code();
  const auto p = PauliOperator::parse("XXII");
  const auto r = check_erasure(c, p);
  const Matrix m = fixture_gbp_code().basis_matrix().adjoint() * oracle::kron_pauli("XXII") *
                   fixture_gbp_code().basis_matrix();
  EXPECT_EQ(r.member, oracle::erasure_holds(c.basis_matrix(), oracle::kron_pauli("XXII")));
  if (!r.member) {
    ASSERT_TRUE(r.witness.has_value());
    const auto& w = *r.witness;
    if (w.i != w.j) {
      EXPECT_LT(std::abs(w.value - m(w.i, w.j)), 1e-12);
    } else {
      EXPECT_LT(std::abs(w.value - (m(w.i, w.i) - m(0, 0))), 1e-12);
    }
  }
}

TEST(erasure, DimensionMismatch) {
  EXPECT_THROW(check_erasure(fixture_gbp_code(), PauliOperator::parse("XX")), ValidationError);
  EXPECT_THROW(check_pure(fixture_gbp_code(), Matrix::Identity(4, 4)), ValidationError);
}

TEST(erasure, PureExamplesOnRainsSubcode) {
  const QuantumCode c = fixture_rains_subcode();
  for (const auto& p : enumerate_paulis(5, 2)) EXPECT_TRUE(check_pure(c, p).member) << p.to_string();
  EXPECT_FALSE(check_pure(c, PauliOperator::parse("IIYZY")).member);
  const Distance d = pure_distance(c);
  EXPECT_EQ(d.value, 3);
  EXPECT_FALSE(d.degenerate);
}

TEST(erasure, DenseOracleAgreement) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 3;
    const Index k = 1 + trial % 3;
    const QuantumCode c = random_code(n, std::min<Index>(k, Index{1} << n), rng);
    for (const auto& s : oracle::all_letter_strings(n)) {
      const auto p = PauliOperator::parse(s);
      const Matrix e = oracle::kron_pauli(s);
      EXPECT_EQ(check_erasure(c, p).member, oracle::erasure_holds(c.basis_matrix(), e)) << s;
      EXPECT_EQ(check_pure(c, p).member, oracle::pure_holds(c.basis_matrix(), e)) << s;
      EXPECT_EQ(check_erasure(c, e).member, check_erasure(c, p).member) << s;
    }
    EXPECT_EQ(erasure_space(c).dim(), oracle_dim(c, false));
    EXPECT_EQ(pure_erasure_space(c).dim(), oracle_dim(c, true));
  }
}

TEST(erasure, GbpDimensionMatchesRankOracle) {
  const QuantumCode c = fixture_gbp_code();
  EXPECT_EQ(erasure_constraints(c).rows(), 15);
  EXPECT_EQ(erasure_constraints(c).cols(), 256);
  EXPECT_EQ(erasure_space(c).dim(), oracle_dim(c, false));
  EXPECT_EQ(pure_erasure_space(c).dim(), oracle_dim(c, true));
}

TEST(erasure, RainsPureDimensionMatchesRankOracle) {
  const QuantumCode c = fixture_rains_subcode();
  const auto s = pure_erasure_space(c);
  EXPECT_EQ(s.dim(), oracle_dim(c, true));
  EXPECT_EQ(s.dim(), 1023);
  EXPECT_TRUE(s.contains(pauli_basis(5).coordinates(PauliOperator::identity(5))));
}

TEST(erasure, PauliSubspaceConsistency) {
  std::mt19937 rng(4);
  std::vector<QuantumCode> codes{fixture_gbp_code(), fixture_rains_subcode(), random_code(3, 2, rng)};
  for (const auto& c : codes) {
    const auto es = erasure_space(c);
    const auto ps = pure_erasure_space(c);
    const PauliBasis& paulis = pauli_basis(c.n());
    for (Index s = 0; s < paulis.size(); ++s) {
      const Vector e = Vector::Unit(paulis.size(), s);
      EXPECT_EQ(check_erasure(c, paulis[s]).member, es.residual(e) < 1e-8) << paulis[s].to_string();
      EXPECT_EQ(check_pure(c, paulis[s]).member, ps.residual(e) < 1e-8) << paulis[s].to_string();
    }
  }
}

TEST(erasure, PureContainedInErasure) {
  std::mt19937 rng(17);
  std::vector<QuantumCode> codes{fixture_gbp_code(), fixture_rains_subcode(), zero_state()};
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 4;
    const Index k = 1 + t % std::min(4, 1 << n);
    codes.push_back(random_code(n, k, rng));
  }
  for (const auto& c : codes) {
    const auto ps = pure_erasure_space(c);
    const auto es = erasure_space(c);
    EXPECT_LT(containment_residual(ps, es), 1e-9) << c.label() << " n=" << c.n() << " K=" << c.k();
    EXPECT_LE(ps.dim(), es.dim());
  }
}

TEST(erasure, AdjointClosure) {
  for (const auto& c : {fixture_gbp_code(), fixture_rains_subcode()}) {
    for (const auto& s : {erasure_space(c), pure_erasure_space(c)}) {
      const Matrix b = s.basis();
      for (Index k = 0; k < b.cols(); k += 7) {
        EXPECT_TRUE(s.contains(adjoint_coordinates(b.col(k))));
      }
    }
  }
}

TEST(erasure, RandomCombinationsSatisfyConditions) {
  std::mt19937 rng(23);
  const QuantumCode c = fixture_gbp_code();
  const auto s = erasure_space(c);
  const Matrix b = s.basis();
  for (int t = 0; t < 5; ++t) {
    const Vector e = b * oracle::random_vector(b.cols(), rng);
    const Matrix dense = dense_from_coordinates(e, 4);
    EXPECT_TRUE(oracle::erasure_holds(c.basis_matrix(), dense, 1e-8));
    EXPECT_TRUE(oracle::projector_form_holds(c.basis_matrix(), dense, 1e-8));
    EXPECT_TRUE(check_erasure(c, dense).member);
    const Vector outside = oracle::random_vector(256, rng);
    EXPECT_FALSE(oracle::erasure_holds(c.basis_matrix(), dense_from_coordinates(outside, 4)));
    EXPECT_FALSE(s.contains(outside));
  }
}

TEST(erasure, DistanceSoundness) {
  std::mt19937 rng(2);
  std::vector<QuantumCode> codes{fixture_gbp_code(), fixture_rains_subcode(), zero_state(),
                                 random_code(3, 2, rng)};
  for (const auto& c : codes) {
    for (const bool pure : {false, true}) {
      const Distance d = pure ? pure_distance(c) : minimum_distance(c);
      // Brute force over letter strings with the dense oracle.
      int brute = c.n() + 1;
      for (const auto& s : oracle::all_letter_strings(c.n())) {
        const Matrix e = oracle::kron_pauli(s);
        const bool ok = pure ? oracle::pure_holds(c.basis_matrix(), e)
                             : oracle::erasure_holds(c.basis_matrix(), e);
        if (!ok) brute = std::min(brute, oracle::letter_weight(s));
      }
      EXPECT_EQ(d.value, brute) << c.label() << (pure ? " pure" : "");
      EXPECT_EQ(d.degenerate, brute == c.n() + 1);
    }
  }
  EXPECT_EQ(minimum_distance(fixture_gbp_code()).value, 2);
  EXPECT_EQ(pure_distance(zero_state()).value, 1);
}

TEST(erasure, ClassificationCounts) {
  const QuantumCode c = fixture_rains_subcode();
  const auto cls = classify_paulis(c, 3, Condition::kPure);
  ASSERT_EQ(cls.per_weight.size(), 4u);
  EXPECT_EQ(cls.per_weight[0].members, 1);
  for (int w = 0; w <= 3; ++w) {
    const auto& wc = cls.per_weight[static_cast<std::size_t>(w)];
    int total = 1;
    for (int i = 0; i < w; ++i) total = total * (5 - i) / (i + 1);
    for (int i = 0; i < w; ++i) total *= 3;
    EXPECT_EQ(wc.members + wc.non_members, total);
    EXPECT_EQ(static_cast<Index>(wc.violators.size()), wc.non_members);
  }
  EXPECT_EQ(cls.per_weight[1].non_members + cls.per_weight[2].non_members, 0);
  // Every violator is reported by the dense oracle as failing.
  for (const auto& v : cls.per_weight[3].violators) {
    EXPECT_FALSE(oracle::pure_holds(c.basis_matrix(), oracle::kron_pauli(v.op.letters_string())));
  }
  EXPECT_THROW(classify_paulis(c, 6, Condition::kPure), ValidationError);
}

TEST(erasure, HermitianBasis) {
  const PauliBasis& paulis = pauli_basis(2);
  const Vector xi = paulis.coordinates(PauliOperator::parse("XI"));
  const Matrix h1 = hermitian_basis(2, Matrix(xi));
  ASSERT_EQ(h1.cols(), 1);
  EXPECT_LT((h1.col(0) - xi).norm(), 1e-12);

  const Vector izi = Scalar(0, 1) * paulis.coordinates(PauliOperator::parse("ZI"));
  const Matrix h2 = hermitian_basis(2, Matrix(izi));
  ASSERT_EQ(h2.cols(), 1);
  EXPECT_LT((adjoint_coordinates(h2.col(0)) + h2.col(0)).norm(), 1e-12);

  // span{XI + iZI} alone is not adjoint-closed.
  EXPECT_THROW(hermitian_basis(2, Matrix(Vector(xi + izi))), ValidationError);

  const auto s = erasure_space(fixture_gbp_code());
  const Matrix h = hermitian_basis(s);
  EXPECT_EQ(h.cols(), s.dim());
  EXPECT_EQ(oracle::rank(h), s.dim());
  for (Index k = 0; k < h.cols(); ++k) {
    const Vector a = adjoint_coordinates(h.col(k));
    const bool herm = (a - h.col(k)).norm() < 1e-9;
    const bool anti = (a + h.col(k)).norm() < 1e-9;
    EXPECT_TRUE(herm || anti);
    EXPECT_TRUE(s.contains(h.col(k)));
  }
}

TEST(erasure, OperatorWeight) {
  const PauliBasis& paulis = pauli_basis(3);
  Vector e = paulis.coordinates(PauliOperator::parse("XII")) + paulis.coordinates(PauliOperator::parse("IIZ"));
  EXPECT_EQ(operator_weight(e, 3), 2);
  EXPECT_EQ(operator_weight(paulis.coordinates(PauliOperator::identity(3)), 3), 0);
}
