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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every comparison is exact.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "selfrecip/census.h"
#include "selfrecip/gf.h"
#include "selfrecip/index2.h"
#include "selfrecip/poly.h"
#include "selfrecip/poly_format.h"
#include "selfrecip/recip.h"

namespace selfrecip {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20260101;

struct GridPoint {
  const char* field;
  int n_max;
};

constexpr GridPoint kGrid[] = {{"2", 18}, {"3", 11}, {"4", 9}, {"5", 8}, {"7", 6}, {"8", 6}, {"9", 6}};

int failures = 0;

void Report(int criterion, bool ok, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

Polynomial RandomMonic(const FieldSpec& spec, int degree, std::mt19937_64& rng, bool nonzero_constant) {
  std::vector<Code> c(degree + 1);
  for (auto& x : c) x = static_cast<Code>(rng() % spec.q());
  if (nonzero_constant && degree > 0) c[0] = static_cast<Code>(1 + rng() % (spec.q() - 1));
  c[degree] = 1;
  return Polynomial(spec, std::move(c));
}

// Criteria 1-4 and the factorization part of 11 share one enumeration.
// Returns whether every factorization re-multiplied to its input.
bool CensusCriteria() {
  const auto start = Clock::now();
  CensusOptions opts;
  opts.budget = UINT64_MAX;
  opts.check_factorization = true;

  bool z_ok = true, identity_ok = true, pr_ok = true, p_ok = true, factor_ok = true;
  std::string z_note, identity_note, pr_note, p_note, factor_note;
  std::uint64_t polynomials = 0;
  for (const auto& g : kGrid) {
    const FieldSpec spec = FieldSpec::Parse(g.field);
    const std::uint64_t q = spec.q();
    const VerificationReport r = Verify(spec, g.n_max, opts);
    for (const auto& d : r.degrees) {
      const int n = d.n;
      const std::string where = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      for (auto c : d.p_brute) polynomials += c;

      BigInt expected_z = n == 0 ? BigInt(1) : n == 1 ? BigInt(q - 2) : ZClosed(q, n);
      if (BigInt(d.z_brute) != expected_z && z_ok) {
        z_ok = false;
        z_note = where;
      }
      if (n >= 2) {
        const BigInt lhs = CountT(q, n) - BigInt(d.pr_brute);
        const BigInt rhs = BigInt(d.z_brute) + BigInt(r.degrees[n - 1].z_brute);
        if (lhs != rhs && identity_ok) {
          identity_ok = false;
          identity_note = where;
        }
      }
      if ((BigInt(d.pr_brute) != PrConv(q, n) || PrConv(q, n) != PrClosed(q, n)) && pr_ok) {
        pr_ok = false;
        pr_note = where;
      }
      BigInt sum = 0;
      for (int j = 0; j <= n; ++j) {
        sum += PCount(q, n, j);
        if (BigInt(d.p_brute[j]) != PCount(q, n, j) && p_ok) {
          p_ok = false;
          p_note = where + " j=" + std::to_string(j) + (d.counterexample ? " " + *d.counterexample : "");
        }
      }
      if (n >= 1 && sum != CountT(q, n) && p_ok) {
        p_ok = false;
        p_note = where + " sum of p(n,j) != t(n)";
      }
      if (!d.factorization_ok && factor_ok) {
        factor_ok = false;
        factor_note = where + (d.counterexample ? " " + *d.counterexample : "");
      }
    }
  }
  const std::string grid = std::to_string(polynomials) + " polynomials, " + Seconds(Since(start));
  Report(1, z_ok, z_ok ? "z brute == closed on the full grid (" + grid + ")" : "first mismatch " + z_note);
  Report(2, identity_ok, identity_ok ? "t - pr == z(n) + z(n-1) on the full grid" : "first mismatch " + identity_note);

  bool conv_ok = true;
  std::string conv_note;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 0; n <= 64; ++n) {
      if (PrConv(q, n) != PrClosed(q, n) && conv_ok) {
        conv_ok = false;
        conv_note = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      }
    }
  }
  bool special_ok = true;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) special_ok = special_ok && PrConv(q, 2) == BigInt(q);
  const bool c3 = conv_ok && pr_ok && special_ok;
  Report(3, c3,
         c3 ? "pr_conv == pr_closed for n <= 64, pr_brute == pr_conv on the grid, pr(2) == q"
            : "conv " + conv_note + " brute " + pr_note + (special_ok ? "" : " pr(2)"));
  Report(4, p_ok, p_ok ? "p(n,j) histogram and sum == t(n) on the full grid" : "first counterexample " + p_note);
  if (!factor_ok) std::cout << "  factorization round trip failed at " << factor_note << std::endl;
  return factor_ok;
}

void BinarySpecialization() {
  bool ok = ZClosed(2, 1) == 0 && ZClosed(2, 2) == 0;
  std::string note;
  for (int n = 3; n <= 64; ++n) {
    const BigInt power = BigInt(1) << (n - 1);
    const BigInt numerator = n % 2 == 1 ? BigInt(power + 2) : BigInt(power - 2);
    const BigInt expected = numerator / 3;
    const BigInt remainder = numerator % 3;
    if (remainder != 0 || ZClosed(2, n) != expected) {
      ok = false;
      if (note.empty()) note = "n=" + std::to_string(n);
    }
  }
  Report(5, ok, ok ? "z(2,n) matches the binary forms for n <= 64" : "first mismatch " + note);
}

std::vector<KVector> AllVectors(int m) {
  std::vector<KVector> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (m - 1)); ++v) {
    std::vector<std::uint8_t> bits(m + 1, 0);
    bits[0] = bits[m] = 1;
    for (int j = 1; j < m; ++j) bits[j] = v >> (m - 1 - j) & 1;
    out.emplace_back(bits);
  }
  return out;
}

void IndexTwoCriteria() {
  const auto start = Clock::now();
  bool count_ok = true;
  std::string count_note;
  std::vector<IndexTwoCount> counts;
  for (int m = 2; m <= 16; ++m) {
    counts.push_back(CountIndexTwo(m));
    const std::uint64_t expected = m == 2 ? 0 : std::uint64_t{1} << (m - 2);
    if (counts.back().count != expected && count_ok) {
      count_ok = false;
      count_note = "m=" + std::to_string(m) + " count=" + std::to_string(counts.back().count);
    }
  }
  const double count_seconds = Since(start);
  count_ok = count_ok && count_seconds < 60.0;
  Report(6, count_ok,
         (count_ok ? "count == 2^(m-2) for 3 <= m <= 16, 0 for m = 2, " : "failed " + count_note + " ") +
             Seconds(count_seconds));

  bool unique_ok = true;
  std::string unique_note;
  bool equiv_ok = true;
  std::string equiv_note;
  std::uint64_t checked = 0;
  for (const auto& c : counts) {
    const int m = c.m;
    std::vector<KVector> by_condition;
    for (const auto& k : AllVectors(m)) {
      if (PalindromeCondition(k)) by_condition.push_back(k);
      const auto sols = SolveIndexTwo(k);
      if (sols.empty()) continue;
      ++checked;
      const bool ok = sols.size() == 1 && ResidualsHold(k, sols[0], 4 * m);
      if (!ok && unique_ok) {
        unique_ok = false;
        unique_note = k.ToString();
      }
    }
    if (by_condition != c.admissible && equiv_ok) {
      equiv_ok = false;
      equiv_note = "m=" + std::to_string(m);
    }
  }
  Report(7, unique_ok,
         unique_ok ? std::to_string(checked) + " admissible k, each with one solution; residuals hold through 4m"
                   : "first failure k=" + unique_note);
  Report(8, equiv_ok, equiv_ok ? "solvable set == palindrome-condition set for 2 <= m <= 16" : "differs at " + equiv_note);

  bool period_ok = true;
  std::string period_note;
  std::uint64_t analyzed = 0;
  for (const auto& c : counts) {
    if (c.m > 10) break;
    for (const auto& k : c.admissible) {
      const auto report = AnalyzePeriodicity(k, SolveIndexTwo(k).at(0));
      ++analyzed;
      if ((!report.s2_purely_periodic || report.s1_purely_periodic) && period_ok) {
        period_ok = false;
        period_note = k.ToString();
      }
    }
  }
  Report(9, period_ok,
         period_ok ? std::to_string(analyzed) + " admissible k with m <= 10: S2 purely periodic, S1 not"
                   : "first failure k=" + period_note);
}

bool OracleAgrees(const Polynomial& f) {
  const auto oracle = MaxSelfReciprocalFactorOracle(f);
  return oracle.size() == 1 && oracle[0] == MaxSelfReciprocalFactor(f).factor;
}

void OracleCriterion() {
  const auto start = Clock::now();
  bool ok = true;
  std::string note;
  std::uint64_t exhaustive = 0, sampled = 0;
  for (const char* field : {"2", "3"}) {
    const FieldSpec spec = FieldSpec::Parse(field);
    for (int n = 0; n <= 8; ++n) {
      for (MonicEnumerator e(spec, n, true); !e.done(); e.Next()) {
        ++exhaustive;
        if (!OracleAgrees(e.current()) && ok) {
          ok = false;
          note = FormatCodeList(e.current());
        }
      }
    }
  }
  std::mt19937_64 rng(kSeed);
  for (const char* field : {"4", "5", "7", "9"}) {
    const FieldSpec spec = FieldSpec::Parse(field);
    for (int s = 0; s < 10000; ++s) {
      const auto f = RandomMonic(spec, 1 + static_cast<int>(rng() % 12), rng, true);
      ++sampled;
      if (!OracleAgrees(f) && ok) {
        ok = false;
        note = field + std::string(" ") + FormatCodeList(f);
      }
    }
  }
  Report(10, ok,
         ok ? std::to_string(exhaustive) + " exhaustive + " + std::to_string(sampled) + " sampled agree, " +
                  Seconds(Since(start))
            : "first counterexample " + note);
}

bool FieldAxioms(const FieldSpec& f) {
  const Code q = static_cast<Code>(f.q());
  for (Code a = 0; a < q; ++a) {
    if (f.Add(a, 0) != a || f.Mul(a, 1) != a || f.Add(a, f.Neg(a)) != 0) return false;
    if (a != 0 && f.Mul(a, f.Inv(a)) != 1) return false;
    for (Code b = 0; b < q; ++b) {
      if (f.Add(a, b) != f.Add(b, a) || f.Mul(a, b) != f.Mul(b, a)) return false;
      if (a != 0 && b != 0 && f.Mul(a, b) == 0) return false;
      for (Code c = 0; c < q; ++c) {
        if (f.Add(f.Add(a, b), c) != f.Add(a, f.Add(b, c))) return false;
        if (f.Mul(f.Mul(a, b), c) != f.Mul(a, f.Mul(b, c))) return false;
        if (f.Mul(a, f.Add(b, c)) != f.Add(f.Mul(a, b), f.Mul(a, c))) return false;
      }
    }
  }
  return true;
}

// Involution, multiplicativity and the gcd(f, f*) property on one pair.
bool ReciprocalProperties(const Polynomial& f, const Polynomial& g) {
  if (ReciprocalRaw(ReciprocalRaw(f)) != f) return false;
  if (ReciprocalRaw(f * g) != ReciprocalRaw(f) * ReciprocalRaw(g)) return false;
  const Polynomial h = GcdMonic(f, ReciprocalRaw(f));
  return MakeMonic(ReciprocalRaw(h)) == h && ReciprocalRaw(h).degree() == h.degree();
}

void PropertyCriterion(bool factorization_ok) {
  const auto start = Clock::now();
  bool axioms = true;
  for (const char* field : {"2", "3", "4", "5", "7", "8", "9"}) axioms = axioms && FieldAxioms(FieldSpec::Parse(field));

  bool recip = true;
  std::string note;
  std::uint64_t cases = 0;
  for (const char* field : {"2", "3", "4", "5"}) {
    const FieldSpec spec = FieldSpec::Parse(field);
    const int max_n = spec.q() == 2 ? 5 : spec.q() == 3 ? 3 : 2;
    std::vector<Polynomial> pool;
    for (int n = 0; n <= max_n; ++n) {
      for (MonicEnumerator e(spec, n, true); !e.done(); e.Next()) {
        pool.push_back(e.current());
        // Non-monic scalar multiples too.
        pool.push_back(e.current().Scaled(static_cast<Code>(spec.q() - 1)));
      }
    }
    for (const auto& f : pool) {
      for (const auto& g : pool) {
        ++cases;
        if (!ReciprocalProperties(f, g) && recip) {
          recip = false;
          note = FormatCodeList(f) + " " + FormatCodeList(g);
        }
      }
    }
  }
  std::mt19937_64 rng(kSeed + 1);
  const std::vector<FieldSpec> fields = {FieldSpec::Parse("2"), FieldSpec::Parse("3"), FieldSpec::Parse("4"),
                                         FieldSpec::Parse("5"), FieldSpec::Parse("7"), FieldSpec::Parse("8"),
                                         FieldSpec::Parse("9")};
  for (int s = 0; s < 10000; ++s) {
    const FieldSpec& spec = fields[rng() % fields.size()];
    const auto f = RandomMonic(spec, static_cast<int>(rng() % 16), rng, true);
    const auto g = RandomMonic(spec, static_cast<int>(rng() % 16), rng, true);
    ++cases;
    if (!ReciprocalProperties(f, g) && recip) {
      recip = false;
      note = FormatCodeList(f) + " " + FormatCodeList(g);
    }
  }
  const bool ok = axioms && recip && factorization_ok;
  std::string detail = "field axioms exhaustive for q <= 9; " + std::to_string(cases) +
                       " reciprocal/gcd cases; factorization round trip on every census polynomial, " +
                       Seconds(Since(start));
  if (!axioms) detail = "field axioms failed";
  if (!recip) detail = "reciprocal property failed on " + note;
  if (!factorization_ok) detail = "factorization round trip failed";
  Report(11, ok, detail);
}

}  // namespace
}  // namespace selfrecip

int main() {
  using namespace selfrecip;
  std::cout << "selfrecip acceptance" << std::endl;
  const bool factorization_ok = CensusCriteria();
  BinarySpecialization();
  IndexTwoCriteria();
  OracleCriterion();
  PropertyCriterion(factorization_ok);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
