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

#include "qunion/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

namespace qunion {
namespace {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kAnalyze: return "analyze";
    case Mode::kClassify: return "classify";
    case Mode::kDistance: return "distance";
    case Mode::kUnion: return "union";
    case Mode::kFormulaCheck: return "theorem-check";
  }
  return "?";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed " + what + " JSON: " + e.what());
  }
}

QuantumCode load_code_file(const std::string& path) {
  return ingest_code(code_description_from_json(parse_json(read_file(path), "code")));
}

CodeTransform load_transform(const std::string& arg, int n) {
  const bool inline_json = arg.find_first_not_of(" \t\n") != std::string::npos &&
                           arg[arg.find_first_not_of(" \t\n")] == '{';
  const std::string text = inline_json ? arg : read_file(arg);
  return transform_from_json(parse_json(text, "transform"), n);
}

ReportJson formula_json(const FormulaCheck& t, bool with_spread) {
  ReportJson j;
  j["dim"] = t.dim;
  j["direct_dim"] = t.direct_dim;
  j["matches_direct"] = t.matches_direct;
  j["residual"] = t.residual;
  if (with_spread) j["m_space_spread"] = t.m_space_spread;
  return j;
}

// Smallest rotation of the letter string.
std::string orbit_key(const std::string& s) {
  std::string best = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    best = std::min(best, s.substr(r) + s.substr(0, r));
  }
  return best;
}

std::vector<std::vector<std::string>> group_by_orbit(const ReportJson& violators) {
  std::vector<std::vector<std::string>> groups;
  std::map<std::string, std::size_t> where;
  for (const auto& v : violators) {
    const auto s = v.get<std::string>();
    const auto key = orbit_key(s);
    auto [it, inserted] = where.emplace(key, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(s);
  }
  return groups;
}

void emit_scalars(std::ostream& os, const ReportJson& body, int indent) {
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() == "per_weight") continue;
    os << std::string(static_cast<std::size_t>(indent), ' ') << it.key() << ":";
    if (it->is_object()) {
      os << "\n";
      emit_scalars(os, *it, indent + 2);
    } else if (it->is_array() && !it->empty() && it->front().is_object()) {
      os << "\n";
      for (const auto& row : *it) {
        os << std::string(static_cast<std::size_t>(indent + 2), ' ') << row.dump() << "\n";
      }
    } else if (it->is_string()) {
      os << " " << it->get<std::string>() << "\n";
    } else {
      os << " " << it->dump() << "\n";
    }
  }
}

void emit_weight_table(std::ostream& os, const ReportJson& per_weight) {
  os << std::left << std::setw(8) << "weight" << std::setw(10) << "members" << std::setw(13)
     << "non_members"
     << "violators\n";
  for (const auto& row : per_weight) {
    os << std::left << std::setw(8) << row["w"].get<int>() << std::setw(10)
       << row["members"].get<long long>() << std::setw(13) << row["non_members"].get<long long>();
    const auto groups = group_by_orbit(row["violators"]);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (g) os << std::string(31, ' ');
      for (std::size_t k = 0; k < groups[g].size(); ++k) os << (k ? " " : "") << groups[g][k];
      os << "\n";
    }
    if (groups.empty()) os << "-\n";
  }
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> kNames = {"rains-subcode", "rains-union", "gbp",
                                                  "gbp-union"};
  return kNames;
}

QuantumCode load_fixture(const std::string& name) {
  if (name == "rains-subcode") return fixture_rains_subcode();
  if (name == "rains-union") return union_code(rains_components(), "rains-union").code;
  if (name == "gbp") return fixture_gbp_code();
  if (name == "gbp-union") {
    const QuantumCode c = fixture_gbp_code();
    QuantumCode image(transform_code(c, gbp_tau()).basis(), "tau gbp");
    return union_code(c, image, "gbp-union").code;
  }
  throw ValidationError("unknown fixture '" + name + "'");
}

ReportJson classification_json(const QuantumCode& c, const Classification& cls, Index dim,
                               Distance d) {
  ReportJson j;
  j["code"] = c.label();
  j["pure"] = cls.condition == Condition::kPure;
  ReportJson rows = ReportJson::array();
  for (const auto& w : cls.per_weight) {
    ReportJson row;
    row["w"] = w.weight;
    row["members"] = w.members;
    row["non_members"] = w.non_members;
    ReportJson names = ReportJson::array();
    for (const auto& v : w.violators) names.push_back(v.op.letters_string());
    row["violators"] = std::move(names);
    rows.push_back(std::move(row));
  }
  j["per_weight"] = std::move(rows);
  j["dim"] = dim;
  j["distance"] = d.value;
  return j;
}

Report classify_report(const QuantumCode& c, int max_weight, bool pure) {
  const Condition cond = pure ? Condition::kPure : Condition::kErasure;
  const auto cls = classify_paulis(c, max_weight, cond);
  const auto space = pure ? pure_erasure_space(c) : erasure_space(c);
  const auto d = pure ? pure_distance(c) : minimum_distance(c);
  return {Mode::kClassify, classification_json(c, cls, space.dim(), d), false};
}

Report analyze_report(const QuantumCode& c, int max_weight, bool pure) {
  const Condition cond = pure ? Condition::kPure : Condition::kErasure;
  const auto d = pure ? pure_distance(c) : minimum_distance(c);
  const auto space = pure ? pure_erasure_space(c) : erasure_space(c);
  ReportJson j = classification_json(c, classify_paulis(c, max_weight, cond), space.dim(), d);
  j["n"] = c.n();
  j["K"] = c.k();
  j["degenerate"] = d.degenerate;
  ReportJson single = ReportJson::array();
  for (int q = 0; q < c.n(); ++q) {
    ReportJson row;
    row["qubit"] = q;
    for (const char* letter : {"X", "Y", "Z"}) {
      std::string s(static_cast<std::size_t>(c.n()), 'I');
      s[static_cast<std::size_t>(q)] = letter[0];
      const auto p = PauliOperator::parse(s);
      row[letter] = (pure ? check_pure(c, p) : check_erasure(c, p)).member;
    }
    single.push_back(std::move(row));
  }
  j["single_qubit"] = std::move(single);
  return {Mode::kAnalyze, std::move(j), false};
}

Report distance_report(const QuantumCode& c) {
  const auto d = minimum_distance(c);
  const auto pd = pure_distance(c);
  ReportJson j;
  j["code"] = c.label();
  j["n"] = c.n();
  j["K"] = c.k();
  j["distance"] = d.value;
  j["degenerate"] = d.degenerate;
  j["pure_distance"] = pd.value;
  j["pure_degenerate"] = pd.degenerate;
  return {Mode::kDistance, std::move(j), false};
}

Report union_report(const QuantumCode& c, const QuantumCode& second,
                    const std::optional<UnitaryAction>& u) {
  const UnionResult uni = union_code(c, second);
  const auto d = minimum_distance(uni.code);
  ReportJson j;
  j["components"] = uni.report.component_labels;
  j["n"] = uni.report.n;
  j["K"] = uni.report.k;
  j["max_cross_overlap"] = uni.report.max_cross_overlap;
  j["distance"] = d.value;
  j["degenerate"] = d.degenerate;
  Report r{Mode::kUnion, {}, false};
  if (u) {
    const auto ef = check_union_erasure_formula(c, *u);
    const auto pf = check_union_pure_formula(c, *u);
    j["erasure_formula"] = formula_json(ef, true);
    j["pure_formula"] = formula_json(pf, false);
    r.assertion_failed = !ef.matches_direct || !pf.matches_direct;
  } else {
    j["erasure_formula"] = nullptr;
    j["pure_formula"] = nullptr;
  }
  r.body = std::move(j);
  return r;
}

Report formula_report(const QuantumCode& c, const CodeTransform& t) {
  const UnitaryAction u(t);
  const auto ef = check_union_erasure_formula(c, u);
  const auto pf = check_union_pure_formula(c, u);
  ReportJson j;
  j["code"] = c.label();
  j["n"] = c.n();
  j["K"] = 2 * c.k();
  j["transform"]["perm"] = t.perm();
  j["transform"]["pauli_type"] = t.is_pauli_type();
  j["erasure_formula"] = formula_json(ef, true);
  j["pure_formula"] = formula_json(pf, false);
  return {Mode::kFormulaCheck, std::move(j), !ef.matches_direct || !pf.matches_direct};
}

Report run_request(const AnalysisRequest& req) {
  if (req.fixture.has_value() == req.code_file.has_value()) {
    throw ValidationError("exactly one of --fixture and --code is required");
  }
  const QuantumCode c = req.fixture ? load_fixture(*req.fixture) : load_code_file(*req.code_file);
  const int max_weight = req.max_weight.value_or(c.n());
  if (max_weight < 0 || max_weight > c.n()) {
    throw ValidationError("--max-weight must lie in [0, " + std::to_string(c.n()) + "]");
  }
  switch (req.mode) {
    case Mode::kAnalyze: return analyze_report(c, max_weight, req.pure);
    case Mode::kClassify: return classify_report(c, max_weight, req.pure);
    case Mode::kDistance: return distance_report(c);
    case Mode::kUnion: {
      if (req.code2_file) return union_report(c, load_code_file(*req.code2_file), std::nullopt);
      if (!req.transform) throw ValidationError("union requires --transform or --code2");
      const UnitaryAction u(load_transform(*req.transform, c.n()));
      QuantumCode image(transform_code(c, u).basis(), "U " + c.label());
      return union_report(c, image, u);
    }
    case Mode::kFormulaCheck:
      if (!req.transform) throw ValidationError("theorem-check requires --transform");
      return formula_report(c, load_transform(*req.transform, c.n()));
  }
  throw InternalError("unhandled mode");
}

std::string emit_report(const Report& report, Format format) {
  if (format == Format::kJson) return report.body.dump(2) + "\n";
  std::ostringstream os;
  os << "mode: " << mode_name(report.mode) << "\n";
  ReportJson scalars = report.body;
  emit_scalars(os, scalars, 0);
  if (report.body.contains("per_weight")) emit_weight_table(os, report.body["per_weight"]);
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Erasure-space analysis of quantum codes and union codes", "qunion"};
  std::string mode;
  AnalysisRequest req;
  std::string format = "json";
  app.add_option("mode", mode, "analyze | classify | distance | union | theorem-check")
      ->required()
      ->check(CLI::IsMember({"analyze", "classify", "distance", "union", "theorem-check"}));
  app.add_option("--fixture", req.fixture, "rains-subcode | rains-union | gbp | gbp-union");
  app.add_option("--code", req.code_file, "code JSON file");
  app.add_option("--code2", req.code2_file, "second code JSON file (union)");
  app.add_option("--transform", req.transform, "transform JSON or file");
  app.add_option("--max-weight", req.max_weight, "largest Pauli weight to classify");
  app.add_flag("--pure", req.pure, "use the pure condition");
  app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", req.out_file, "write the report to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 1;
  }

  static const std::map<std::string, Mode> kModes = {{"analyze", Mode::kAnalyze},
                                                     {"classify", Mode::kClassify},
                                                     {"distance", Mode::kDistance},
                                                     {"union", Mode::kUnion},
                                                     {"theorem-check", Mode::kFormulaCheck}};
  req.mode = kModes.at(mode);
  req.format = format == "table" ? Format::kTable : Format::kJson;

  try {
    const Report report = run_request(req);
    const std::string text = emit_report(report, req.format);
    if (req.out_file) {
      std::ofstream f(*req.out_file);
      if (!f) throw ValidationError("cannot write '" + *req.out_file + "'");
      f << text;
    } else {
      out << text;
    }
    if (report.assertion_failed) {
      err << "error: internal: intersection formula does not match the direct computation\n";
      return 2;
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: validation: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "error: internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qunion
