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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qunion/code.hpp"
#include "qunion/erasure.hpp"
#include "qunion/union.hpp"

namespace qunion {

using ReportJson = nlohmann::ordered_json;

enum class Mode { kAnalyze, kClassify, kDistance, kUnion, kFormulaCheck };
enum class Format { kJson, kTable };

struct AnalysisRequest {
  Mode mode = Mode::kAnalyze;
  std::optional<std::string> fixture;
  std::optional<std::string> code_file;
  std::optional<std::string> code2_file;
  std::optional<std::string> transform;  // inline JSON or a file path
  std::optional<int> max_weight;         // defaults to n
  bool pure = false;
  Format format = Format::kJson;
  std::optional<std::string> out_file;
};

/// Names accepted by --fixture: rains-subcode, rains-union, gbp, gbp-union.
const std::vector<std::string>& fixture_names();
QuantumCode load_fixture(const std::string& name);

struct Report {
  Mode mode = Mode::kAnalyze;
  ReportJson body;
  /// Set when a computed identity failed (CLI exit status 2).
  bool assertion_failed = false;
};

ReportJson classification_json(const QuantumCode& c, const Classification& cls, Index dim,
                               Distance d);

Report analyze_report(const QuantumCode& c, int max_weight, bool pure);
Report classify_report(const QuantumCode& c, int max_weight, bool pure);
Report distance_report(const QuantumCode& c);
/// Union of `c` with `second`; when `u` is given, second = U c and the
/// intersection formulas are checked as well.
Report union_report(const QuantumCode& c, const QuantumCode& second,
                    const std::optional<UnitaryAction>& u);
Report formula_report(const QuantumCode& c, const CodeTransform& t);

Report run_request(const AnalysisRequest& req);

/// JSON is printed with two-space indentation and a trailing newline. The
/// table form groups violators into cyclic-shift classes.
std::string emit_report(const Report& report, Format format);

/// `args` excludes the program name. Exit status: 0 success, 1 invalid
/// input, 2 failed internal check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qunion
