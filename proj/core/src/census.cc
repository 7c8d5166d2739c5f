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

#include "selfrecip/census.h"

#include <algorithm>
#include <chrono>
#include <thread>

#include "selfrecip/errors.h"
#include "selfrecip/poly_format.h"
#include "selfrecip/recip.h"

namespace selfrecip {
namespace {

void RequirePrimePower(std::uint64_t q) {
  if (q < 2) Throw(ErrorCode::kNotPrime, "q must be a prime power >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  while (q % p == 0) q /= p;
  if (q != 1) Throw(ErrorCode::kNotPrime, "q must be a prime power");
}

BigInt Pow(std::uint64_t base, int e) { return boost::multiprecision::pow(BigInt(base), e); }

struct ChunkResult {
  std::vector<std::uint64_t> counts;
  std::vector<std::optional<Polynomial>> first_example;
  std::uint64_t factorization_failures = 0;
  std::uint64_t oracle_failures = 0;
  std::optional<Polynomial> first_failure;
};

ChunkResult RunChunk(const FieldSpec& spec, int n, std::uint64_t begin, std::uint64_t end,
                     const IrreducibleTable& table, const CensusOptions& options) {
  ChunkResult r;
  r.counts.assign(n + 1, 0);
  r.first_example.resize(n + 1);
  MonicEnumerator it(spec, n, true);
  it.Seek(begin);
  for (; it.index() < end; it.Next()) {
    const Polynomial& f = it.current();
    const Factorization fac = Factor(f, table);
    const int j = MaxSelfReciprocalDegree(fac);
    ++r.counts[j];
    if (!r.first_example[j]) r.first_example[j] = f;

    bool failed = false;
    if (options.check_factorization) {
      bool ok = fac.Expand() == f;
      for (const auto& fp : fac.factors) ok = ok && IsIrreducible(fp.factor);
      if (!ok) {
        ++r.factorization_failures;
        failed = true;
      }
    }
    if (options.check_oracle) {
      const auto oracle = MaxSelfReciprocalFactorOracle(f);
      if (oracle.size() != 1 || !(oracle[0] == MaxSelfReciprocalFactor(fac).factor)) {
        ++r.oracle_failures;
        failed = true;
      }
    }
    if (failed && !r.first_failure) r.first_failure = f;
  }
  return r;
}

}  // namespace

BigInt CountT(std::uint64_t q, int n) {
  RequirePrimePower(q);
  if (n < 1) Throw(ErrorCode::kBadDegree, "t(n) needs n >= 1");
  return BigInt(q - 1) * Pow(q, n - 1);
}

BigInt CountS(std::uint64_t q, int n) {
  RequirePrimePower(q);
  if (n < 0) Throw(ErrorCode::kBadDegree, "s(n) needs n >= 0");
  return Pow(q, n / 2);
}

BigInt ZClosed(std::uint64_t q, int n) {
  RequirePrimePower(q);
  if (n < 0) Throw(ErrorCode::kBadDegree, "z(n) needs n >= 0");
  if (n == 0) return 1;
  if (n == 1) return BigInt(q - 2);
  const BigInt qm1 = q - 1;
  BigInt numerator = qm1 * qm1 * Pow(q, n - 1);
  if (n % 2 == 1) {
    numerator += 2 * qm1;
  } else {
    numerator -= 2 * qm1;
  }
  const BigInt denominator = q + 1;
  if (numerator % denominator != 0) {
    Throw(ErrorCode::kNonDivisible, "z(" + std::to_string(n) + ") numerator not divisible by q+1");
  }
  return numerator / denominator;
}

BigInt PrConv(std::uint64_t q, int n) {
  RequirePrimePower(q);
  BigInt sum = 0;
  for (int i = 0; i + 2 <= n; ++i) sum += ZClosed(q, i) * CountS(q, n - i);
  return sum;
}

BigInt PrClosed(std::uint64_t q, int n) {
  RequirePrimePower(q);
  if (n < 0) Throw(ErrorCode::kBadDegree, "pr(n) needs n >= 0");
  if (n < 2) return 0;
  // Odd n = 2m+1 gives (q-1) q^(2m-1), even n = 2m >= 4 gives (q-1) q^(2m-2):
  // both are (q-1) q^(n-2). The even form fails at n = 2, where pr = z(0) s(2) = q.
  if (n == 2) return BigInt(q);
  return BigInt(q - 1) * Pow(q, n - 2);
}

BigInt PCount(std::uint64_t q, int n, int j) {
  if (j < 0 || j > n) Throw(ErrorCode::kBadRange, "p(n, j) needs 0 <= j <= n");
  return ZClosed(q, n - j) * CountS(q, j);
}

std::uint64_t CensusHistogram::pr() const {
  std::uint64_t sum = 0;
  for (std::size_t j = 2; j < counts.size(); ++j) sum += counts[j];
  return sum;
}

std::vector<CensusRow> CensusHistogram::Rows() const {
  std::vector<CensusRow> rows;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    rows.push_back({q, n, static_cast<int>(j), BigInt(counts[j])});
  }
  return rows;
}

CensusHistogram CensusBrute(const FieldSpec& spec, int n, const CensusOptions& options) {
  if (n < 0) Throw(ErrorCode::kBadDegree, "census needs n >= 0");
  const MonicEnumerator probe(spec, n, true);
  const std::uint64_t size = probe.size();
  if (size > options.budget) {
    Throw(ErrorCode::kBudgetExceeded, std::to_string(size) + " polynomials exceed the budget of " +
                                          std::to_string(options.budget));
  }
  const auto table = IrreducibleTableFor(spec, std::max(1, n / 2));

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(1, size / 1024)));

  std::vector<ChunkResult> chunks(threads);
  auto bound = [&](unsigned t) { return size / threads * t + std::min<std::uint64_t>(t, size % threads); };
  if (threads == 1) {
    chunks[0] = RunChunk(spec, n, 0, size, *table, options);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] { chunks[t] = RunChunk(spec, n, bound(t), bound(t + 1), *table, options); });
    }
  }

  // Merge in chunk order so "first" means first in enumeration order.
  CensusHistogram h;
  h.q = spec.q();
  h.n = n;
  h.total = size;
  h.counts.assign(n + 1, 0);
  h.first_example.resize(n + 1);
  for (auto& c : chunks) {
    for (int j = 0; j <= n; ++j) {
      h.counts[j] += c.counts[j];
      if (!h.first_example[j] && c.first_example[j]) h.first_example[j] = std::move(c.first_example[j]);
    }
    h.factorization_failures += c.factorization_failures;
    h.oracle_failures += c.oracle_failures;
    if (!h.first_failure && c.first_failure) h.first_failure = std::move(c.first_failure);
  }
  return h;
}

VerificationReport Verify(const FieldSpec& spec, int n_max, const CensusOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::uint64_t q = spec.q();
  VerificationReport report;
  report.field = spec.Descriptor();
  report.q = q;
  report.n_max = n_max;

  std::uint64_t previous_z = 0;
  for (int n = 0; n <= n_max; ++n) {
    const auto degree_start = Clock::now();
    const CensusHistogram h = CensusBrute(spec, n, options);
    DegreeCheck d;
    d.n = n;
    d.t = n >= 1 ? CountT(q, n) : BigInt(1);
    d.z_closed = ZClosed(q, n);
    d.z_brute = h.z();
    d.pr_conv = PrConv(q, n);
    d.pr_closed = PrClosed(q, n);
    d.pr_brute = h.pr();
    d.p_brute = h.counts;
    for (int j = 0; j <= n; ++j) d.p_closed.push_back(PCount(q, n, j));

    d.z_ok = d.z_closed == d.z_brute;
    d.pr_ok = d.pr_conv == d.pr_closed && d.pr_closed == d.pr_brute;
    d.p_ok = true;
    BigInt bucket_sum = 0;
    BigInt closed_sum = 0;
    for (int j = 0; j <= n; ++j) {
      bucket_sum += d.p_brute[j];
      closed_sum += d.p_closed[j];
      if (d.p_closed[j] != d.p_brute[j]) {
        d.p_ok = false;
        if (!d.counterexample && h.first_example[j]) {
          d.counterexample = "bucket j=" + std::to_string(j) + " first f=" + FormatCodeList(*h.first_example[j]);
        }
      }
    }
    d.sum_ok = bucket_sum == d.t && closed_sum == d.t;
    d.identity_ok = n < 2 || d.t - BigInt(d.pr_brute) == BigInt(d.z_brute) + BigInt(previous_z);
    d.factorization_ok = h.factorization_failures == 0;
    d.oracle_ok = h.oracle_failures == 0;
    if (!d.counterexample && h.first_failure) d.counterexample = "f=" + FormatCodeList(*h.first_failure);
    d.seconds = std::chrono::duration<double>(Clock::now() - degree_start).count();

    previous_z = d.z_brute;
    report.passed = report.passed && d.passed();
    report.degrees.push_back(std::move(d));
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace selfrecip
