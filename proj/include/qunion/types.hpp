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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qunion {

using Scalar = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Tolerances shared by every analysis.
inline constexpr double kElementTol = 1e-9;    // matrix-element zero test
inline constexpr double kRankTol = 1e-8;       // relative singular-value cutoff
inline constexpr double kResidualTol = 1e-8;   // subspace membership
inline constexpr double kUnitaryTol = 1e-9;    // normalization / unitarity

// Pauli bookkeeping uses 32-bit masks; dense kets stop much earlier.
inline constexpr int kMaxQubits = 12;

/// Raised for malformed or inconsistent user input (CLI exit status 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed identity fails beyond tolerance (CLI exit status 2).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qunion
