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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "selfrecip/census.h"
#include "selfrecip/errors.h"
#include "selfrecip/index2.h"
#include "selfrecip/poly_format.h"
#include "selfrecip/recip.h"
#include "selfrecip/report_io.h"

namespace selfrecip::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20260101;

struct RunConfig {
  std::vector<std::string> args;
  std::string command;
  std::string field;
  std::string format = "table";
  std::string out_path;
  std::uint64_t budget = CensusOptions::kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  int n = 0;
  int n_max = 0;
  std::string m;
  std::string k;
  std::string poly;
  bool brute = false;
  bool check_factors = false;
  bool check_oracle = false;
  std::uint64_t samples = 10000;

  json ToJson() const {
    json j = {{"args", args}, {"command", command}, {"format", format}, {"budget", budget}};
    if (!field.empty()) j["field"] = field;
    return j;
  }

  CensusOptions Census() const {
    CensusOptions o;
    o.budget = budget;
    o.threads = threads;
    o.check_factorization = check_factors;
    o.check_oracle = check_oracle;
    return o;
  }
};

// Machine output goes to --out when given, otherwise to `out`.
void Emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) Throw(ErrorCode::kParseError, "cannot open --out path " + config.out_path);
  file << text;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

std::string YesNo(bool b) { return b ? "yes" : "NO"; }

int CmdCensus(const RunConfig& config, std::ostream& out) {
  const FieldSpec spec = FieldSpec::Parse(config.field);
  const std::uint64_t q = spec.q();
  const int n = config.n;
  if (n < 0) Throw(ErrorCode::kBadDegree, "--n must be >= 0");

  const BigInt t = n >= 1 ? CountT(q, n) : BigInt(1);
  const BigInt s = CountS(q, n);
  const BigInt z = ZClosed(q, n);
  const BigInt pr_conv = PrConv(q, n);
  const BigInt pr_closed = PrClosed(q, n);
  std::vector<CensusRow> rows;
  for (int j = 0; j <= n; ++j) rows.push_back({q, n, j, PCount(q, n, j)});

  std::optional<CensusHistogram> brute;
  bool match = true;
  if (config.brute) {
    brute = CensusBrute(spec, n, config.Census());
    match = z == brute->z() && pr_closed == brute->pr() && pr_conv == pr_closed;
    for (int j = 0; j <= n; ++j) match = match && rows[j].count == brute->counts[j];
  }

  if (config.format == "json") {
    json rows_json = json::array();
    for (const auto& r : rows) rows_json.push_back(ToJson(r));
    json j = {{"config", config.ToJson()},
              {"field", spec.Descriptor()},
              {"q", q},
              {"n", n},
              {"t", ToDecimal(t)},
              {"s", ToDecimal(s)},
              {"z", ToDecimal(z)},
              {"pr_conv", ToDecimal(pr_conv)},
              {"pr_closed", ToDecimal(pr_closed)},
              {"rows", rows_json}};
    if (brute) {
      json brute_rows = json::array();
      for (const auto& r : brute->Rows()) brute_rows.push_back(ToJson(r));
      j["brute"] = {{"z", std::to_string(brute->z())},
                    {"pr", std::to_string(brute->pr())},
                    {"rows", brute_rows},
                    {"match", match}};
    }
    Emit(config, out, Dump(j));
  } else if (config.format == "csv") {
    std::ostringstream os;
    os << "q,n,j,count" << (brute ? ",brute,match" : "") << '\n';
    for (const auto& r : rows) {
      os << r.q << ',' << r.n << ',' << r.j << ',' << ToDecimal(r.count);
      if (brute) os << ',' << brute->counts[r.j] << ',' << (r.count == brute->counts[r.j] ? 1 : 0);
      os << '\n';
    }
    Emit(config, out, os.str());
  } else {
    std::ostringstream os;
    os << "census over " << spec.Descriptor() << " (q=" << q << "), n=" << n << '\n';
    auto line = [&](const std::string& name, const BigInt& closed, std::optional<std::uint64_t> b) {
      os << std::left << std::setw(12) << name << std::setw(28) << ToDecimal(closed);
      if (b) os << std::setw(16) << *b << YesNo(closed == *b);
      os << '\n';
    };
    os << std::left << std::setw(12) << "quantity" << std::setw(28) << "closed";
    if (brute) os << std::setw(16) << "brute" << "match";
    os << '\n';
    line("t", t, std::nullopt);
    line("s", s, std::nullopt);
    line("z", z, brute ? std::optional(brute->z()) : std::nullopt);
    line("pr_conv", pr_conv, std::nullopt);
    line("pr_closed", pr_closed, brute ? std::optional(brute->pr()) : std::nullopt);
    for (int j = 0; j <= n; ++j) {
      line("p(" + std::to_string(n) + "," + std::to_string(j) + ")", rows[j].count,
           brute ? std::optional(brute->counts[j]) : std::nullopt);
    }
    if (brute) os << (match ? "all brute-force counts match\n" : "MISMATCH\n");
    Emit(config, out, os.str());
  }
  return match ? kExitOk : kExitMismatch;
}

int CmdVerify(const RunConfig& config, std::ostream& out) {
  const FieldSpec spec = FieldSpec::Parse(config.field);
  if (config.n_max < 0) Throw(ErrorCode::kBadDegree, "--nmax must be >= 0");
  const VerificationReport report = Verify(spec, config.n_max, config.Census());

  const bool machine_to_stdout = config.out_path.empty() && config.format != "table";
  if (!machine_to_stdout) {
    out << "verify over " << report.field << " (q=" << report.q << "), n <= " << report.n_max << '\n';
    out << std::left << std::setw(4) << "n" << std::setw(16) << "t" << std::setw(14) << "z"
        << std::setw(14) << "pr" << std::setw(7) << "z" << std::setw(7) << "pr" << std::setw(7)
        << "p(n,j)" << std::setw(7) << "ident" << std::setw(7) << "sum" << std::setw(6) << "ok"
        << "seconds\n";
    for (const auto& d : report.degrees) {
      out << std::left << std::setw(4) << d.n << std::setw(16) << ToDecimal(d.t) << std::setw(14)
          << d.z_brute << std::setw(14) << d.pr_brute << std::setw(7) << YesNo(d.z_ok)
          << std::setw(7) << YesNo(d.pr_ok) << std::setw(7) << YesNo(d.p_ok) << std::setw(7)
          << YesNo(d.identity_ok) << std::setw(7) << YesNo(d.sum_ok) << std::setw(6)
          << YesNo(d.passed()) << std::fixed << std::setprecision(3) << d.seconds << '\n';
      if (d.counterexample) out << "    counterexample: " << *d.counterexample << '\n';
    }
    out << (report.passed ? "PASS" : "FAIL") << '\n';
  }
  if (machine_to_stdout || !config.out_path.empty()) {
    if (config.format == "csv") {
      std::ostringstream os;
      os << "q,n,j,count,closed,match\n";
      for (const auto& d : report.degrees) {
        for (std::size_t j = 0; j < d.p_brute.size(); ++j) {
          os << report.q << ',' << d.n << ',' << j << ',' << d.p_brute[j] << ','
             << ToDecimal(d.p_closed[j]) << ',' << (d.p_closed[j] == d.p_brute[j] ? 1 : 0) << '\n';
        }
      }
      Emit(config, out, os.str());
    } else {
      json j = ToJson(report);
      j["config"] = config.ToJson();
      Emit(config, out, Dump(j));
    }
  }
  return report.passed ? kExitOk : kExitMismatch;
}

int CmdRecip(const RunConfig& config, std::ostream& out) {
  const FieldSpec spec = FieldSpec::Parse(config.field);
  const Polynomial f = ParsePolynomial(spec, config.poly);
  const ReciprocalReport report = AnalyzeReciprocal(f);

  if (config.format == "json") {
    json j = ToJson(report);
    j["config"] = config.ToJson();
    Emit(config, out, Dump(j));
  } else if (config.format == "csv") {
    std::ostringstream os;
    os << "factor,multiplicity,class,partner,contributed\n";
    for (const auto& e : report.breakdown) {
      os << '"' << FormatCodeList(e.factor) << "\"," << e.multiplicity << ','
         << SelfAssocTagName(e.cls.tag) << ",\"" << (e.cls.partner ? FormatCodeList(*e.cls.partner) : "")
         << "\"," << e.contributed << '\n';
    }
    Emit(config, out, os.str());
  } else {
    std::ostringstream os;
    os << "field        " << spec.Descriptor() << '\n';
    os << "f            " << FormatCodeList(f) << "  (" << FormatHuman(f) << ")\n";
    os << "f*           " << FormatCodeList(report.reciprocal) << "  ("
       << FormatHuman(report.reciprocal) << ")\n";
    os << "factors      " << report.factorization.unit.code();
    for (const auto& fp : report.factorization.factors) {
      os << " * " << FormatCodeList(fp.factor);
      if (fp.multiplicity > 1) os << '^' << fp.multiplicity;
    }
    os << '\n';
    os << "max factor   " << FormatCodeList(report.split.factor) << "  (degree "
       << report.split.factor.degree() << ")\n";
    os << "cofactor     " << FormatCodeList(report.split.cofactor) << '\n';
    for (const auto& e : report.breakdown) {
      os << "  " << std::left << std::setw(20) << FormatCodeList(e.factor) << " e=" << e.multiplicity
         << "  " << std::setw(17) << SelfAssocTagName(e.cls.tag);
      if (e.cls.partner) os << " partner " << FormatCodeList(*e.cls.partner);
      os << " contributes " << e.contributed << '\n';
    }
    Emit(config, out, os.str());
  }
  return kExitOk;
}

std::pair<int, int> ParseOrderRange(const std::string& text) {
  auto parse = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      Throw(ErrorCode::kParseError, "bad order '" + text + "'");
    }
  };
  if (text.empty()) Throw(ErrorCode::kParseError, "--m is required");
  if (auto colon = text.find(':'); colon != std::string::npos) {
    return {parse(text.substr(0, colon)), parse(text.substr(colon + 1))};
  }
  const int m = parse(text);
  return {m, m};
}

std::uint64_t ExpectedIndexTwoCount(int m) { return m == 2 ? 0 : std::uint64_t{1} << (m - 2); }

int CmdIndex2Count(const RunConfig& config, std::ostream& out) {
  const auto [lo, hi] = ParseOrderRange(config.m);
  if (hi < lo) Throw(ErrorCode::kBadRange, "empty order range");
  bool all_match = true;
  json rows = json::array();
  std::ostringstream table;
  std::ostringstream csv;
  csv << "m,count,expected,match\n";
  table << std::left << std::setw(6) << "m" << std::setw(12) << "count" << std::setw(12)
        << "expected" << "match\n";
  for (int m = lo; m <= hi; ++m) {
    const IndexTwoCount c = CountIndexTwo(m);
    const std::uint64_t expected = ExpectedIndexTwoCount(m);
    const bool match = c.count == expected;
    all_match = all_match && match;
    rows.push_back({{"m", m}, {"count", c.count}, {"expected", expected}, {"match", match}});
    csv << m << ',' << c.count << ',' << expected << ',' << (match ? 1 : 0) << '\n';
    table << std::left << std::setw(6) << m << std::setw(12) << c.count << std::setw(12) << expected
          << YesNo(match) << '\n';
  }
  if (config.format == "json") {
    Emit(config, out, Dump({{"config", config.ToJson()}, {"rows", rows}, {"match", all_match}}));
  } else if (config.format == "csv") {
    Emit(config, out, csv.str());
  } else {
    Emit(config, out, table.str());
  }
  return all_match ? kExitOk : kExitMismatch;
}

int CmdIndex2List(const RunConfig& config, std::ostream& out) {
  const auto [lo, hi] = ParseOrderRange(config.m);
  std::ostringstream text;
  std::ostringstream csv;
  csv << "m,k\n";
  json lists = json::array();
  for (int m = lo; m <= hi; ++m) {
    const IndexTwoCount c = CountIndexTwo(m);
    json ks = json::array();
    for (const auto& k : c.admissible) {
      ks.push_back(k.ToString());
      csv << m << ',' << k.ToString() << '\n';
      text << k.ToString() << '\n';
    }
    lists.push_back({{"m", m}, {"count", c.count}, {"admissible", ks}});
  }
  if (config.format == "json") {
    Emit(config, out, Dump({{"config", config.ToJson()}, {"orders", lists}}));
  } else if (config.format == "csv") {
    Emit(config, out, csv.str());
  } else {
    Emit(config, out, text.str());
  }
  return kExitOk;
}

int CmdIndex2Solve(const RunConfig& config, std::ostream& out) {
  const KVector k = KVector::Parse(config.k);
  const int m = k.order();
  const std::vector<IndexTwoSolution> solutions = SolveIndexTwo(k);
  const std::optional<bool> condition =
      m >= 2 ? std::optional(PalindromeCondition(k)) : std::nullopt;

  json sols = json::array();
  std::ostringstream os;
  os << "k " << k.ToString() << "  (m=" << m << ")\n";
  if (condition) os << "palindrome condition  " << (*condition ? "holds" : "fails") << '\n';
  if (solutions.empty()) os << "unsolvable\n";
  for (const auto& a : solutions) {
    const PeriodicityReport per = AnalyzePeriodicity(k, a);
    sols.push_back(ToJson(k, a, per));
    std::string terms;
    for (auto b : a.Take(std::max<std::size_t>(24, 2 * a.prefix().size()))) terms.push_back(b ? '1' : '0');
    os << "a_0.. " << terms << "...\n";
    os << "period " << per.period << ", preperiod " << per.preperiod << '\n';
    os << "S1 (from a_{m-1}) purely periodic  " << (per.s1_purely_periodic ? "yes" : "no") << '\n';
    os << "S2 (from a_{m-2}) purely periodic  " << (per.s2_purely_periodic ? "yes" : "no") << '\n';
    if (m >= 2 && CoincidesWithSpecialForm(a, m)) os << "coincides with sequence 0100... or 0111...\n";
  }
  if (config.format == "json") {
    json j = {{"config", config.ToJson()},
              {"k", k.ToString()},
              {"m", m},
              {"solvable", !solutions.empty()},
              {"solutions", sols}};
    j["palindrome_condition"] = condition ? json(*condition) : json(nullptr);
    Emit(config, out, Dump(j));
  } else if (config.format == "csv") {
    std::ostringstream csv;
    csv << "k,prefix,period,preperiod,s1_purely_periodic,s2_purely_periodic\n";
    for (const auto& s : sols) {
      csv << s["k"].get<std::string>() << ',' << s["prefix"].get<std::string>() << ','
          << s["period"] << ',' << s["preperiod"] << ','
          << (s["purely_periodic_flags"]["s1"].get<bool>() ? 1 : 0) << ','
          << (s["purely_periodic_flags"]["s2"].get<bool>() ? 1 : 0) << '\n';
    }
    Emit(config, out, csv.str());
  } else {
    Emit(config, out, os.str());
  }
  return kExitOk;
}

// Seeded sample of monic polynomials with nonzero constant, checking the
// constructive maximal factor against the divisor oracle.
int CmdOracle(const RunConfig& config, std::ostream& out) {
  const FieldSpec spec = FieldSpec::Parse(config.field);
  if (config.n < 1) Throw(ErrorCode::kBadDegree, "--n must be >= 1");
  std::mt19937_64 rng(config.seed);
  std::uint64_t mismatches = 0;
  std::optional<Polynomial> first;
  for (std::uint64_t s = 0; s < config.samples; ++s) {
    const int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.n));
    std::vector<Code> c(degree + 1);
    c[0] = static_cast<Code>(1 + rng() % (spec.q() - 1));
    for (int i = 1; i < degree; ++i) c[i] = static_cast<Code>(rng() % spec.q());
    c[degree] = 1;
    const Polynomial f(spec, std::move(c));
    const auto oracle = MaxSelfReciprocalFactorOracle(f);
    const SelfReciprocalSplit split = MaxSelfReciprocalFactor(f);
    const bool ok = oracle.size() == 1 && oracle[0] == split.factor &&
                    split.factor * split.cofactor == f;
    if (!ok) {
      ++mismatches;
      if (!first) first = f;
    }
  }
  if (config.format == "json") {
    json j = {{"config", config.ToJson()},
              {"seed", config.seed},
              {"samples", config.samples},
              {"mismatches", mismatches}};
    if (first) j["first_counterexample"] = FormatCodeList(*first);
    Emit(config, out, Dump(j));
  } else {
    std::ostringstream os;
    os << "oracle check over " << spec.Descriptor() << ", degree <= " << config.n << ", "
       << config.samples << " samples, seed " << config.seed << ": " << mismatches << " mismatches\n";
    if (first) os << "first counterexample " << FormatCodeList(*first) << '\n';
    Emit(config, out, os.str());
  }
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.args = args;
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      config.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "ignoring malformed " << kBudgetEnv << "='" << env << "'\n";
    }
  }

  CLI::App app{"Finite-field polynomial census and self-reciprocal factor toolkit", "selfrecip"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", config.out_path, "Write the machine report to this path");
    sub->add_option("--budget", config.budget, "Max polynomials per brute-force degree");
    sub->add_option("--seed", config.seed, "Seed for sampled checks");
    sub->add_option("--threads", config.threads, "Worker threads for enumeration (0 = all cores)");
  };

  auto* census = app.add_subcommand("census", "Closed-form counts, optionally checked by enumeration");
  census->add_option("--field", config.field, "Field descriptor: q, p^k, or p^k;modulus=a0,...,ak")->required();
  census->add_option("--n", config.n, "Degree")->required();
  census->add_flag("--brute", config.brute, "Also enumerate and compare");
  add_common(census);

  auto* verify = app.add_subcommand("verify", "Enumerate degrees 0..nmax and compare every count");
  verify->add_option("--field", config.field, "Field descriptor")->required();
  verify->add_option("--nmax", config.n_max, "Largest degree")->required();
  verify->add_flag("--check-factors", config.check_factors, "Re-multiply and re-test every factorization");
  verify->add_flag("--check-oracle", config.check_oracle, "Compare each polynomial against the divisor oracle");
  add_common(verify);

  auto* recip = app.add_subcommand("recip", "Reciprocal, factorization and maximal self-reciprocal factor");
  recip->add_option("--field", config.field, "Field descriptor")->required();
  recip->add_option("--poly", config.poly, "Polynomial: [a0,...,an], x^2+2*x+1, or an F_2 bitstring")->required();
  add_common(recip);

  auto* oracle = app.add_subcommand("oracle", "Seeded random comparison against the divisor oracle");
  oracle->add_option("--field", config.field, "Field descriptor")->required();
  oracle->add_option("--n", config.n, "Largest degree sampled")->required();
  oracle->add_option("--samples", config.samples, "Number of samples");
  add_common(oracle);

  auto* index2 = app.add_subcommand("index2", "Index-2 linear systems over F_2");
  index2->require_subcommand(1);
  auto* i2count = index2->add_subcommand("count", "Count solvable k vectors of order m (or a:b)");
  i2count->add_option("--m", config.m, "Order or range a:b")->required();
  add_common(i2count);
  auto* i2list = index2->add_subcommand("list", "List solvable k vectors of order m (or a:b)");
  i2list->add_option("--m", config.m, "Order or range a:b")->required();
  add_common(i2list);
  auto* i2solve = index2->add_subcommand("solve", "Solve the system for one k bitstring");
  i2solve->add_option("--k", config.k, "Bitstring k0k1...km")->required();
  add_common(i2solve);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (census->parsed()) {
      config.command = "census";
      return CmdCensus(config, out);
    }
    if (verify->parsed()) {
      config.command = "verify";
      return CmdVerify(config, out);
    }
    if (recip->parsed()) {
      config.command = "recip";
      return CmdRecip(config, out);
    }
    if (oracle->parsed()) {
      config.command = "oracle";
      return CmdOracle(config, out);
    }
    if (i2count->parsed()) {
      config.command = "index2 count";
      return CmdIndex2Count(config, out);
    }
    if (i2list->parsed()) {
      config.command = "index2 list";
      return CmdIndex2List(config, out);
    }
    if (i2solve->parsed()) {
      config.command = "index2 solve";
      return CmdIndex2Solve(config, out);
    }
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kBudgetExceeded ? kExitBudget : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace selfrecip::cli
