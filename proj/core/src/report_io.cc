// Copyright 2026 The selfrecip Authors.
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

#include "selfrecip/report_io.h"

#include <sstream>

#include "selfrecip/poly_format.h"

namespace selfrecip {

std::string ToDecimal(const BigInt& value) { return value.str(); }

nlohmann::json ToJson(const CensusRow& row) {
  return {{"q", row.q}, {"n", row.n}, {"j", row.j}, {"count", ToDecimal(row.count)}};
}

std::string ToCsv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "q,n,j,count\n";
  for (const auto& r : rows) os << r.q << ',' << r.n << ',' << r.j << ',' << ToDecimal(r.count) << '\n';
  return os.str();
}

nlohmann::json ToJson(const DegreeCheck& check) {
  nlohmann::json p_closed = nlohmann::json::array();
  for (const auto& v : check.p_closed) p_closed.push_back(ToDecimal(v));
  nlohmann::json p_brute = nlohmann::json::array();
  for (auto v : check.p_brute) p_brute.push_back(std::to_string(v));
  nlohmann::json out = {
      {"n", check.n},
      {"t", ToDecimal(check.t)},
      {"z_closed", ToDecimal(check.z_closed)},
      {"z_brute", std::to_string(check.z_brute)},
      {"pr_conv", ToDecimal(check.pr_conv)},
      {"pr_closed", ToDecimal(check.pr_closed)},
      {"pr_brute", std::to_string(check.pr_brute)},
      {"p_closed", p_closed},
      {"p_brute", p_brute},
      {"checks",
       {{"z", check.z_ok},
        {"pr", check.pr_ok},
        {"p", check.p_ok},
        {"identity", check.identity_ok},
        {"sum", check.sum_ok},
        {"factorization", check.factorization_ok},
        {"oracle", check.oracle_ok}}},
      {"passed", check.passed()},
  };
  if (check.counterexample) out["counterexample"] = *check.counterexample;
  return out;
}

nlohmann::json ToJson(const VerificationReport& report) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& d : report.degrees) degrees.push_back(ToJson(d));
  return {{"field", report.field},
          {"q", report.q},
          {"n_max", report.n_max},
          {"degrees", degrees},
          {"passed", report.passed}};
}

nlohmann::json ToJson(const Factorization& factorization) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& fp : factorization.factors) {
    factors.push_back({{"factor", FormatCodeList(fp.factor)}, {"multiplicity", fp.multiplicity}});
  }
  return {{"unit", factorization.unit.code()}, {"factors", factors}};
}

nlohmann::json ToJson(const ReciprocalReport& report) {
  nlohmann::json breakdown = nlohmann::json::array();
  for (const auto& e : report.breakdown) {
    nlohmann::json entry = {{"factor", FormatCodeList(e.factor)},
                            {"multiplicity", e.multiplicity},
                            {"class", std::string(SelfAssocTagName(e.cls.tag))},
                            {"contributed", e.contributed}};
    if (e.cls.partner) entry["partner"] = FormatCodeList(*e.cls.partner);
    breakdown.push_back(std::move(entry));
  }
  return {{"input", FormatCodeList(report.input)},
          {"reciprocal", FormatCodeList(report.reciprocal)},
          {"factorization", ToJson(report.factorization)},
          {"max_factor", FormatCodeList(report.split.factor)},
          {"max_factor_degree", report.split.factor.degree()},
          {"cofactor", FormatCodeList(report.split.cofactor)},
          {"class_breakdown", breakdown}};
}

nlohmann::json ToJson(const KVector& k, const IndexTwoSolution& solution,
                      const PeriodicityReport& periodicity) {
  std::string prefix;
  for (auto b : solution.prefix()) prefix.push_back(b ? '1' : '0');
  return {{"k", k.ToString()},
          {"prefix", prefix},
          {"period", periodicity.period},
          {"preperiod", periodicity.preperiod},
          {"purely_periodic_flags",
           {{"s1", periodicity.s1_purely_periodic}, {"s2", periodicity.s2_purely_periodic}}},
          {"special_form", CoincidesWithSpecialForm(solution, k.order())}};
}

}  // namespace selfrecip
