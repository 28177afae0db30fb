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

#include <cmath>
#include <sstream>

#include "qunion/linalg.hpp"

namespace qunion {
namespace {

std::vector<std::string> cyclic_orbit(const std::string& bits) {
  std::vector<std::string> out;
  const auto n = bits.size();
  for (std::size_t s = 0; s < n; ++s) {
    out.push_back(bits.substr(n - s) + bits.substr(0, n - s));
  }
  return out;
}

std::string format_complex(Scalar z) {
  std::ostringstream os;
  os.precision(3);
  os << std::abs(z);
  return os.str();
}

}  // namespace

QuantumCode::QuantumCode(std::vector<Ket> basis, std::string label)
    : basis_(std::move(basis)), label_(std::move(label)) {
  if (basis_.empty()) throw ValidationError("a code needs at least one basis vector");
  n_ = basis_.front().num_qubits();
  for (const auto& k : basis_) {
    if (k.num_qubits() != n_) throw ValidationError("basis kets have different qubit counts");
  }
  if (k() > (Index{1} << n_)) throw ValidationError("more basis vectors than dimensions");
  const Matrix b = basis_matrix();
  const Matrix gram = b.adjoint() * b;
  if ((gram - Matrix::Identity(k(), k())).cwiseAbs().maxCoeff() > kUnitaryTol) {
    throw ValidationError("code basis is not orthonormal");
  }
}

Matrix QuantumCode::basis_matrix() const {
  Matrix b(Index{1} << n_, k());
  for (Index i = 0; i < k(); ++i) b.col(i) = basis_[static_cast<std::size_t>(i)].amplitudes();
  return b;
}

QuantumCode ingest_code(const CodeDescription& desc) {
  if (desc.basis.empty()) throw ValidationError("code '" + desc.label + "' has no basis vectors");
  std::vector<Ket> kets;
  for (std::size_t i = 0; i < desc.basis.size(); ++i) {
    Ket raw = Ket::from_terms(desc.n, desc.basis[i]);
    if (raw.norm() < kUnitaryTol) {
      throw ValidationError("basis vector " + std::to_string(i) + " is zero");
    }
    kets.push_back(raw.normalized());
  }
  for (std::size_t i = 0; i < kets.size(); ++i) {
    for (std::size_t j = i + 1; j < kets.size(); ++j) {
      const Scalar ov = inner_product(kets[i], kets[j]);
      if (std::abs(ov) > kElementTol) {
        throw ValidationError("basis vectors " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not orthogonal (|overlap| = " + format_complex(ov) + ")");
      }
    }
  }
  return {std::move(kets), desc.label};
}

QuantumCode transform_code(const QuantumCode& c, const CodeTransform& t) {
  return transform_code(c, UnitaryAction(t));
}

QuantumCode transform_code(const QuantumCode& c, const UnitaryAction& u) {
  if (u.num_qubits() != c.n()) throw ValidationError("transform_code: dimension mismatch");
  std::vector<Ket> out;
  out.reserve(c.basis().size());
  for (const auto& k : c.basis()) out.push_back(u.apply(k));
  return {std::move(out), "U(" + c.label() + ")"};
}

Matrix code_projector(const QuantumCode& c) {
  const Matrix b = c.basis_matrix();
  return b * b.adjoint();
}

double projector_distance(const QuantumCode& a, const QuantumCode& b) {
  if (a.n() != b.n()) throw ValidationError("projector_distance: dimension mismatch");
  return linalg::spectral_norm(code_projector(a) - code_projector(b));
}

QuantumCode fixture_rains_subcode() {
  CodeDescription d{5, "rains-subcode", {{}}};
  auto& terms = d.basis.front();
  terms.push_back({1.0, "00000"});
  for (const auto& b : cyclic_orbit("00011")) terms.push_back({-1.0, b});
  for (const auto& b : cyclic_orbit("00101")) terms.push_back({1.0, b});
  for (const auto& b : cyclic_orbit("01111")) terms.push_back({-1.0, b});
  return ingest_code(d);
}

QuantumCode fixture_gbp_code() {
  CodeDescription d{4, "gbp", {}};
  d.basis.push_back({{1.0, "0000"}, {1.0, "1111"}});
  d.basis.push_back({{1.0, "0110"}, {1.0, "1001"}});
  d.basis.push_back({{1.0, "0101"}, {1.0, "1010"}});
  d.basis.push_back({{1.0, "1100"}, {1.0, "0011"}});
  return ingest_code(d);
}

CodeTransform rains_tau() { return CodeTransform::from_pauli(PauliOperator::parse("IIXXX")); }

CodeTransform rains_orbit_transform(int shift) {
  return compose(CodeTransform::cyclic_shift(5, shift), rains_tau());
}

std::vector<QuantumCode> rains_components() {
  const QuantumCode c0 = fixture_rains_subcode();
  std::vector<QuantumCode> out{c0};
  for (int i = 0; i < 5; ++i) {
    auto ci = transform_code(c0, rains_orbit_transform(i));
    out.emplace_back(ci.basis(), "pi^" + std::to_string(i) + " tau C0");
  }
  return out;
}

CodeTransform gbp_tau() { return CodeTransform::from_pauli(PauliOperator::parse("IIIY")); }

CodeDescription code_description_from_json(const nlohmann::json& j) {
  try {
    CodeDescription d;
    d.n = j.at("n").get<int>();
    d.label = j.value("label", std::string("code"));
    for (const auto& vec : j.at("basis")) {
      std::vector<BasisTerm> terms;
      for (const auto& t : vec) {
        terms.push_back({Scalar(t.value("re", 0.0), t.value("im", 0.0)), t.at("bits").get<std::string>()});
      }
      d.basis.push_back(std::move(terms));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed code JSON: ") + e.what());
  }
}

nlohmann::json code_to_json(const QuantumCode& c) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& k : c.basis()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : k.terms()) {
      terms.push_back({{"re", t.amplitude.real()}, {"im", t.amplitude.imag()}, {"bits", t.bits}});
    }
    basis.push_back(std::move(terms));
  }
  return {{"n", c.n()}, {"label", c.label()}, {"basis", std::move(basis)}};
}

CodeTransform transform_from_json(const nlohmann::json& j, int n) {
  try {
    auto t = CodeTransform::identity(n);
    std::vector<int> perm = t.perm();
    std::vector<Local> locals = t.locals();
    if (j.contains("perm")) perm = j.at("perm").get<std::vector<int>>();
    if (j.contains("locals")) {
      locals.clear();
      for (const auto& l : j.at("locals")) {
        if (l.is_string()) {
          locals.push_back(named_local(l.get<std::string>()));
          continue;
        }
        if (!l.is_array() || l.size() != 4) {
          throw ValidationError("local matrix must be a name or four [re, im] pairs");
        }
        Local m;
        for (int e = 0; e < 4; ++e) {
          const auto& z = l.at(static_cast<std::size_t>(e));
          m(e / 2, e % 2) = Scalar(z.at(0).get<double>(), z.at(1).get<double>());
        }
        locals.push_back(m);
      }
    }
    if (static_cast<int>(perm.size()) != n || static_cast<int>(locals.size()) != n) {
      throw ValidationError("transform size does not match code length " + std::to_string(n));
    }
    return {std::move(perm), std::move(locals)};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed transform JSON: ") + e.what());
  }
}

nlohmann::json transform_to_json(const CodeTransform& t) {
  nlohmann::json locals = nlohmann::json::array();
  for (const auto& m : t.locals()) {
    nlohmann::json entries = nlohmann::json::array();
    for (int e = 0; e < 4; ++e) entries.push_back({m(e / 2, e % 2).real(), m(e / 2, e % 2).imag()});
    locals.push_back(std::move(entries));
  }
  return {{"perm", t.perm()}, {"locals", std::move(locals)}};
}

}  // namespace qunion
