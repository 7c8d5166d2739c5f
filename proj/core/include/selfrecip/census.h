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

#ifndef SELFRECIP_CENSUS_H_
#define SELFRECIP_CENSUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selfrecip/gf.h"
#include "selfrecip/poly.h"

namespace selfrecip {

using BigInt = boost::multiprecision::cpp_int;

// Closed-form counts over F_q. All exact; q must be a prime power >= 2.

// Monic degree-n polynomials with nonzero constant: (q-1) q^(n-1). n >= 1.
BigInt CountT(std::uint64_t q, int n);
// Monic self-reciprocal polynomials of degree n: s(0) = 1, s(2j) = s(2j+1) = q^j.
BigInt CountS(std::uint64_t q, int n);
// Palindrome-free monic polynomials of degree n with nonzero constant.
// n >= 2 evaluates ((q-1)^2 q^(n-1) + (-1)^(n+1) 2 (q-1)) / (q+1) and throws
// NonDivisible if the division is inexact.
BigInt ZClosed(std::uint64_t q, int n);
// Partially reciprocal count as the convolution sum_{i<=n-2} z(i) s(n-i).
BigInt PrConv(std::uint64_t q, int n);
// Partially reciprocal count in closed form; pr(2) = q is special-cased.
BigInt PrClosed(std::uint64_t q, int n);
// Polynomials whose maximal self-reciprocal factor has degree exactly j:
// z(n-j) s(j), 0 <= j <= n (BadRange otherwise).
BigInt PCount(std::uint64_t q, int n, int j);

struct CensusRow {
  std::uint64_t q;
  int n;
  int j;
  BigInt count;
};

struct CensusOptions {
  static constexpr std::uint64_t kDefaultBudget = 2'000'000;

  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;             // 0: hardware concurrency
  bool check_factorization = false;  // Expand() == f for every polynomial
  bool check_oracle = false;         // compare against the divisor oracle
};

// Histogram of max self-reciprocal factor degrees over all monic degree-n
// polynomials with nonzero constant.
struct CensusHistogram {
  std::uint64_t q = 0;
  int n = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;                   // index j = 0..n
  std::vector<std::optional<Polynomial>> first_example;  // first f per bucket
  std::uint64_t factorization_failures = 0;
  std::uint64_t oracle_failures = 0;
  std::optional<Polynomial> first_failure;

  std::uint64_t z() const { return counts.empty() ? 0 : counts[0]; }
  // Buckets j >= 2.
  std::uint64_t pr() const;
  std::vector<CensusRow> Rows() const;
};

// Throws BudgetExceeded when the stream is longer than options.budget. The
// result does not depend on options.threads.
CensusHistogram CensusBrute(const FieldSpec& spec, int n, const CensusOptions& options = {});

struct DegreeCheck {
  int n = 0;
  BigInt t;
  BigInt z_closed;
  std::uint64_t z_brute = 0;
  BigInt pr_conv;
  BigInt pr_closed;
  std::uint64_t pr_brute = 0;
  std::vector<BigInt> p_closed;
  std::vector<std::uint64_t> p_brute;

  bool z_ok = false;
  bool pr_ok = false;
  bool p_ok = false;
  bool identity_ok = false;  // t(n) - pr(n) = z(n) + z(n-1); vacuous for n < 2
  bool sum_ok = false;
  bool factorization_ok = false;
  bool oracle_ok = false;
  std::optional<std::string> counterexample;
  double seconds = 0.0;

  bool passed() const {
    return z_ok && pr_ok && p_ok && identity_ok && sum_ok && factorization_ok && oracle_ok;
  }
};

struct VerificationReport {
  std::string field;
  std::uint64_t q = 0;
  int n_max = 0;
  std::vector<DegreeCheck> degrees;  // n = 0..n_max
  bool passed = true;
  double seconds = 0.0;
};

// Brute-force census for every 0 <= n <= n_max compared against the closed
// forms by exact equality.
VerificationReport Verify(const FieldSpec& spec, int n_max, const CensusOptions& options = {});

}  // namespace selfrecip

#endif  // SELFRECIP_CENSUS_H_
