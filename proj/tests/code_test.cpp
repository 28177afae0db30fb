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

#include "qunion/code.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace qunion;

namespace {

std::string rotate_bits(const std::string& s, int k) {
  const auto n = s.size();
  std::string out(n, '0');
  for (std::size_t q = 0; q < n; ++q) out[(q + static_cast<std::size_t>(k)) % n] = s[q];
  return out;
}

}  // namespace

TEST(code, IngestGbp) {
  const QuantumCode c = fixture_gbp_code();
  EXPECT_EQ(c.n(), 4);
  EXPECT_EQ(c.k(), 4);
  const Matrix b = c.basis_matrix();
  EXPECT_LT((b.adjoint() * b - Matrix::Identity(4, 4)).norm(), 1e-12);
  for (const auto& k : c.basis()) {
    const auto terms = k.terms();
    ASSERT_EQ(terms.size(), 2u);
    for (const auto& t : terms) EXPECT_NEAR(std::abs(t.amplitude), 1.0 / std::sqrt(2.0), 1e-12);
  }
}

TEST(code, IngestSingleKet) {
  const QuantumCode c = ingest_code({5, "zero", {{{1.0, "00000"}}}});
  EXPECT_EQ(c.k(), 1);
  EXPECT_EQ(c.n(), 5);
}

TEST(code, IngestErrors) {
  CodeDescription twice{2, "dup", {{{1.0, "01"}}, {{2.0, "01"}}}};
  try {
    ingest_code(twice);
    FAIL() << "expected orthogonality error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("0 and 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ingest_code({2, "zero", {{{1.0, "01"}, {-1.0, "01"}}}}), ValidationError);
  EXPECT_THROW(ingest_code({2, "len", {{{1.0, "011"}}}}), ValidationError);
  EXPECT_THROW(ingest_code({2, "empty", {}}), ValidationError);
}

TEST(code, RainsSubcodeFixture) {
  const QuantumCode c = fixture_rains_subcode();
  ASSERT_EQ(c.k(), 1);
  const Ket& k = c[0];
  EXPECT_NEAR(k.norm(), 1.0, 1e-12);
  EXPECT_EQ(k.terms().size(), 16u);
  const double unit = 0.25;
  EXPECT_NEAR(k.amplitude("00000").real(), unit, 1e-12);
  EXPECT_NEAR(k.amplitude("00011").real(), -unit, 1e-12);
  EXPECT_NEAR(k.amplitude("00101").real(), unit, 1e-12);
  EXPECT_NEAR(k.amplitude("01111").real(), -unit, 1e-12);

  // Orbits of 00011, 00101, 01111 are disjoint and of size 5.
  std::set<std::string> all{"00000"};
  for (const std::string seed : {"00011", "00101", "01111"}) {
    for (int s = 0; s < 5; ++s) all.insert(rotate_bits(seed, s));
  }
  EXPECT_EQ(all.size(), 16u);
}

TEST(code, Projector) {
  const Matrix p1 = code_projector(fixture_rains_subcode());
  EXPECT_EQ(oracle::rank(p1), 1);
  const Matrix p = code_projector(fixture_gbp_code());
  EXPECT_NEAR(p.trace().real(), 4.0, 1e-12);
  EXPECT_LT((p * p - p).norm(), 1e-9);
  EXPECT_LT((p - p.adjoint()).norm(), 1e-12);
  EXPECT_EQ(oracle::rank(p), 4);
}

TEST(code, TransformGbpByLocalY) {
  const QuantumCode c = fixture_gbp_code();
  const QuantumCode image = transform_code(c, gbp_tau());
  CodeDescription listed{4, "listed", {}};
  listed.basis.push_back({{1.0, "0001"}, {-1.0, "1110"}});
  listed.basis.push_back({{1.0, "0010"}, {-1.0, "1101"}});
  listed.basis.push_back({{1.0, "0100"}, {-1.0, "1011"}});
  listed.basis.push_back({{1.0, "1000"}, {-1.0, "0111"}});
  EXPECT_LT(projector_distance(image, ingest_code(listed)), 1e-9);
  EXPECT_LT(projector_distance(transform_code(c, CodeTransform::identity(4)), c), 1e-9);
}

TEST(code, RainsSubcodeUnderShift) {
  // Shifted generator built by rotating the bitstrings directly.
  const QuantumCode c = fixture_rains_subcode();
  CodeDescription shifted{5, "shifted", {{}}};
  for (const auto& t : c[0].terms()) shifted.basis[0].push_back({t.amplitude, rotate_bits(t.bits, 1)});
  const QuantumCode moved = transform_code(c, CodeTransform::cyclic_shift(5, 1));
  EXPECT_LT(projector_distance(moved, ingest_code(shifted)), 1e-9);
}

TEST(code, TransformThenInverse) {
  std::mt19937 rng(21);
  const QuantumCode c = fixture_gbp_code();
  std::vector<Local> locals;
  for (int q = 0; q < 4; ++q) locals.push_back(Local(oracle::random_unitary(2, rng)));
  const CodeTransform t({3, 1, 0, 2}, locals);
  const QuantumCode there = transform_code(c, t);
  EXPECT_GT(projector_distance(there, c), 1e-3);
  EXPECT_LT(projector_distance(transform_code(there, t.inverse()), c), 1e-9);
}

TEST(code, RainsComponentsOrthogonal) {
  const auto parts = rains_components();
  ASSERT_EQ(parts.size(), 6u);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      EXPECT_LT(std::abs(inner_product(parts[a][0], parts[b][0])), 1e-9) << a << "," << b;
    }
  }
}

TEST(code, JsonRoundTrip) {
  for (const auto& c : {fixture_gbp_code(), fixture_rains_subcode()}) {
    const nlohmann::json j = code_to_json(c);
    const QuantumCode back = ingest_code(code_description_from_json(nlohmann::json::parse(j.dump())));
    EXPECT_EQ(back.k(), c.k());
    EXPECT_EQ(back.label(), c.label());
    EXPECT_LT(projector_distance(back, c), 1e-9);
  }
  EXPECT_THROW(code_description_from_json(nlohmann::json{{"n", 2}}), ValidationError);
}

TEST(code, TransformJson) {
  const auto t = transform_from_json(nlohmann::json::parse(R"({"locals":["I","I","I","Y"]})"), 4);
  EXPECT_EQ(t.perm(), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(t.local_pauli().has_value());
  EXPECT_EQ(t.local_pauli()->letters_string(), "IIIY");

  const auto m = transform_from_json(
      nlohmann::json::parse(R"({"perm":[1,0],"locals":["H",[[0,0],[1,0],[1,0],[0,0]]]})"), 2);
  EXPECT_EQ(m.perm(), (std::vector<int>{1, 0}));
  EXPECT_LT((m.locals()[1] - named_local("X")).norm(), 1e-15);

  const auto back = transform_from_json(transform_to_json(m), 2);
  EXPECT_LT((UnitaryAction(back).dense() - UnitaryAction(m).dense()).norm(), 1e-15);

  EXPECT_THROW(transform_from_json(nlohmann::json::parse(R"({"locals":["I"]})"), 2), ValidationError);
  EXPECT_THROW(transform_from_json(nlohmann::json::parse(R"({"perm":[0,0]})"), 2), ValidationError);
  EXPECT_THROW(transform_from_json(nlohmann::json::parse(R"({"locals":[[1,2]]})"), 1), ValidationError);
}
