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

#include "qunion/subspace.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qunion/pauli.hpp"

using namespace qunion;

namespace {

Vector coords(const std::string& letters) {
  return pauli_basis(static_cast<int>(letters.size()))
      .coordinates(PauliOperator::parse(letters));
}

Matrix columns(const std::vector<Vector>& vs) {
  Matrix m(vs.front().size(), static_cast<Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Index>(i)) = vs[i];
  return m;
}

}  // namespace

TEST(subspace, FullAndZero) {
  const auto f = OperatorSubspace::full(2);
  const auto z = OperatorSubspace::zero(2);
  EXPECT_EQ(f.ambient_dim(), 16);
  EXPECT_EQ(f.dim(), 16);
  EXPECT_EQ(z.dim(), 0);
  EXPECT_EQ(z.codim(), 16);
  EXPECT_TRUE(f.contains(coords("XY")));
  EXPECT_FALSE(z.contains(coords("XY")));
  EXPECT_TRUE(z.contains(Vector::Zero(16)));
}

TEST(subspace, SpanAndBasis) {
  const auto s = OperatorSubspace::span(2, columns({coords("XI"), coords("ZI"), coords("XI") + coords("ZI")}));
  EXPECT_EQ(s.dim(), 2);
  const Matrix b = s.basis();
  EXPECT_EQ(b.cols(), 2);
  EXPECT_LT((b.adjoint() * b - Matrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_LT((s.complement().adjoint() * b).norm(), 1e-12);
  EXPECT_TRUE(s.contains(coords("XI") * Scalar(0.3, -2.0) + coords("ZI")));
  EXPECT_FALSE(s.contains(coords("YI")));
  EXPECT_NEAR(s.residual(coords("YI")), 1.0, 1e-12);
}

TEST(subspace, FromConstraints) {
  // Single constraint: coefficient of II equals coefficient of ZZ.
  Matrix rows = Matrix::Zero(1, 16);
  rows(0, 0) = 1.0;
  rows(0, pauli_basis(2).index_of(PauliOperator::parse("ZZ"))) = -1.0;
  const auto s = OperatorSubspace::from_constraints(2, rows);
  EXPECT_EQ(s.dim(), 15);
  EXPECT_TRUE(s.contains(coords("II") + coords("ZZ")));
  EXPECT_FALSE(s.contains(coords("II")));
  EXPECT_TRUE(s.contains(coords("XY")));
}

TEST(subspace, Intersections) {
  const auto a = OperatorSubspace::span(2, columns({coords("XI"), coords("ZI")}));
  const auto b = OperatorSubspace::span(2, columns({coords("XI"), coords("YI")}));
  const auto c = intersect(a, b);
  EXPECT_EQ(c.dim(), 1);
  EXPECT_TRUE(c.contains(coords("XI")));
  EXPECT_LT(subspace_distance(c, OperatorSubspace::span(2, coords("XI"))), 1e-12);

  EXPECT_LT(subspace_distance(intersect(a, OperatorSubspace::full(2)), a), 1e-12);
  EXPECT_LT(subspace_distance(intersect(a, a), a), 1e-12);
  EXPECT_EQ(intersect(a, OperatorSubspace::zero(2)).dim(), 0);

  const std::vector<OperatorSubspace> three{a, b, OperatorSubspace::span(2, coords("ZI"))};
  EXPECT_EQ(intersect(three).dim(), 0);
}

TEST(subspace, RandomIntersectionMatchesRankFormula) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Index da = 3 + trial % 5, db = 9 + trial % 4;
    const Matrix va = oracle::random_frame(16, da, rng);
    const Matrix vb = oracle::random_frame(16, db, rng);
    const auto a = OperatorSubspace::span(2, va);
    const auto b = OperatorSubspace::span(2, vb);
    Matrix both(16, da + db);
    both << va, vb;
    // dim(A ∩ B) = dim A + dim B - dim(A + B)
    const Index expected = da + db - oracle::rank(both);
    const auto c = intersect(a, b);
    EXPECT_EQ(c.dim(), expected);
    const Matrix basis = c.basis();
    for (Index k = 0; k < basis.cols(); ++k) {
      EXPECT_TRUE(a.contains(basis.col(k)));
      EXPECT_TRUE(b.contains(basis.col(k)));
    }
  }
}

TEST(subspace, MembershipProbes) {
  std::mt19937 rng(8);
  const Matrix v = oracle::random_frame(16, 6, rng);
  const auto s = OperatorSubspace::span(2, v);
  for (int t = 0; t < 20; ++t) {
    const Vector inside = v * oracle::random_vector(6, rng);
    EXPECT_TRUE(s.contains(inside));
    const Vector outside = oracle::random_vector(16, rng);
    EXPECT_FALSE(s.contains(outside));
  }
}

TEST(subspace, ContainmentAndDistance) {
  const auto small = OperatorSubspace::span(2, coords("XI"));
  const auto big = OperatorSubspace::span(2, columns({coords("XI"), coords("ZZ")}));
  EXPECT_LT(containment_residual(small, big), 1e-12);
  EXPECT_NEAR(containment_residual(big, small), 1.0, 1e-12);
  EXPECT_NEAR(subspace_distance(small, big), 1.0, 1e-12);
  EXPECT_LT(subspace_distance(big, big), 1e-12);
  EXPECT_LT(containment_residual(OperatorSubspace::zero(2), small), 1e-12);
  EXPECT_LT(containment_residual(small, OperatorSubspace::full(2)), 1e-12);
}

TEST(subspace, MappedByUnitary) {
  std::mt19937 rng(3);
  const Matrix u = oracle::random_unitary(16, rng);
  const Matrix v = oracle::random_frame(16, 5, rng);
  const auto s = OperatorSubspace::span(2, v);
  const auto image = s.mapped([&](const Vector& e) { return Vector(u * e); });
  EXPECT_EQ(image.dim(), 5);
  EXPECT_LT(subspace_distance(image, OperatorSubspace::span(2, u * v)), 1e-9);
}
