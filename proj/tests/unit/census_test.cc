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

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "selfrecip/errors.h"
#include "selfrecip/recip.h"
#include "test_util.h"

namespace selfrecip {
namespace {

using ::selfrecip::testing::SmallFields;

// Histogram of max self-reciprocal divisor degree computed by trial dividing
// f by every monic self-reciprocal polynomial. Does not factor anything.
std::vector<std::uint64_t> HistogramByDivision(const FieldSpec& spec, int n) {
  std::vector<Polynomial> palindromes;
  for (int d = 1; d <= n; ++d) {
    for (const auto& g : EnumerateMonic(spec, d, true)) {
      if (IsSelfReciprocal(g)) palindromes.push_back(g);
    }
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& f : EnumerateMonic(spec, n, true)) {
    int best = 0;
    for (const auto& g : palindromes) {
      if (g.degree() > best && DivMod(f, g).remainder.IsZero()) best = g.degree();
    }
    ++counts[best];
  }
  return counts;
}

// Self-reciprocal count by testing every monic polynomial.
std::uint64_t CountSelfReciprocalByEnumeration(const FieldSpec& spec, int n) {
  std::uint64_t count = 0;
  for (const auto& f : EnumerateMonic(spec, n, true)) count += IsSelfReciprocal(f);
  return count;
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(CountT(2, 5), 16);
  EXPECT_EQ(CountS(2, 0), 1);
  EXPECT_EQ(CountS(3, 4), 9);
  EXPECT_EQ(CountS(3, 5), 9);
  EXPECT_EQ(ZClosed(2, 0), 1);
  EXPECT_EQ(ZClosed(2, 1), 0);
  EXPECT_EQ(ZClosed(2, 2), 0);
  EXPECT_EQ(ZClosed(2, 3), 2);
  EXPECT_EQ(ZClosed(2, 5), 6);
  EXPECT_EQ(ZClosed(3, 1), 1);
  EXPECT_EQ(ZClosed(3, 2), 2);
  EXPECT_EQ(PrClosed(2, 2), 2);
  EXPECT_EQ(PrClosed(3, 2), 3);
  EXPECT_EQ(PrClosed(3, 3), 6);
  EXPECT_EQ(PrClosed(5, 1), 0);
  EXPECT_EQ(PCount(2, 5, 0), 6);
}

TEST(ClosedForms, Errors) {
  EXPECT_THROW(CountT(6, 3), AlgebraError);
  EXPECT_THROW(CountT(2, 0), AlgebraError);
  EXPECT_THROW(CountS(2, -1), AlgebraError);
  EXPECT_THROW(ZClosed(2, -1), AlgebraError);
  EXPECT_THROW(PCount(2, 3, 4), AlgebraError);
  EXPECT_THROW(PCount(2, 3, -1), AlgebraError);
}

TEST(ClosedForms, ExactDivisionAndLargeValues) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 128}) {
    for (int n = 0; n <= 80; ++n) EXPECT_NO_THROW(ZClosed(q, n)) << q << " " << n;
  }
  // 2^100 is beyond any machine word.
  EXPECT_EQ(CountT(2, 101), BigInt(1) << 100);
}

TEST(ClosedForms, ConvolutionMatchesClosedPr) {
  for (std::uint64_t q = 2; q <= 9; ++q) {
    if (q == 6) continue;
    for (int n = 0; n <= 64; ++n) EXPECT_EQ(PrConv(q, n), PrClosed(q, n)) << q << " " << n;
  }
}

TEST(ClosedForms, PartitionOfT) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 27}) {
    for (int n = 1; n <= 40; ++n) {
      BigInt sum = 0;
      for (int j = 0; j <= n; ++j) sum += PCount(q, n, j);
      EXPECT_EQ(sum, CountT(q, n)) << q << " " << n;
      EXPECT_EQ(CountT(q, n) - PrClosed(q, n), ZClosed(q, n) + ZClosed(q, n - 1));
    }
  }
}

TEST(ClosedForms, BinaryFieldSpecialization) {
  for (int n = 2; n <= 60; ++n) {
    const BigInt sign = n % 2 == 1 ? 2 : -2;
    EXPECT_EQ(3 * ZClosed(2, n), (BigInt(1) << (n - 1)) + sign) << n;
    EXPECT_EQ(PrClosed(2, n), n == 2 ? BigInt(2) : BigInt(1) << (n - 2));
  }
}

TEST(ClosedForms, SelfReciprocalCountMatchesEnumeration) {
  for (const auto& spec : SmallFields()) {
    const int max_n = spec.q() <= 3 ? 8 : 4;
    for (int n = 0; n <= max_n; ++n) {
      EXPECT_EQ(CountS(spec.q(), n), CountSelfReciprocalByEnumeration(spec, n))
          << spec.Descriptor() << " n=" << n;
    }
  }
}

TEST(CensusBrute, MatchesDivisionOracle) {
  for (const auto& spec : SmallFields()) {
    const int max_n = spec.q() == 2 ? 8 : spec.q() == 3 ? 6 : 4;
    for (int n = 0; n <= max_n; ++n) {
      const auto h = CensusBrute(spec, n);
      EXPECT_EQ(h.counts, HistogramByDivision(spec, n)) << spec.Descriptor() << " n=" << n;
    }
  }
}

TEST(CensusBrute, MatchesClosedForms) {
  for (const auto& spec : SmallFields()) {
    const int max_n = spec.q() <= 3 ? 9 : 5;
    for (int n = 0; n <= max_n; ++n) {
      const auto h = CensusBrute(spec, n);
      EXPECT_EQ(BigInt(h.z()), ZClosed(spec.q(), n));
      EXPECT_EQ(BigInt(h.pr()), PrClosed(spec.q(), n));
      for (int j = 0; j <= n; ++j) EXPECT_EQ(BigInt(h.counts[j]), PCount(spec.q(), n, j));
      if (n >= 1) EXPECT_EQ(BigInt(h.total), CountT(spec.q(), n));
      for (int j = 0; j <= n; ++j) {
        if (h.counts[j] == 0) {
          EXPECT_FALSE(h.first_example[j]);
        } else {
          ASSERT_TRUE(h.first_example[j]);
          EXPECT_EQ(MaxSelfReciprocalFactor(*h.first_example[j]).factor.degree(), j);
        }
      }
    }
  }
}

TEST(CensusBrute, ThreadCountDoesNotChangeTheResult) {
  const FieldSpec spec = FieldSpec::Parse("3");
  CensusOptions one;
  one.threads = 1;
  one.check_factorization = true;
  const auto base = CensusBrute(spec, 10, one);
  for (unsigned threads : {2u, 3u, 4u, 7u}) {
    CensusOptions opts = one;
    opts.threads = threads;
    const auto h = CensusBrute(spec, 10, opts);
    EXPECT_EQ(h.counts, base.counts);
    EXPECT_EQ(h.first_example, base.first_example);
    EXPECT_EQ(h.factorization_failures, 0u);
  }
}

TEST(CensusBrute, Budget) {
  CensusOptions opts;
  opts.budget = 100;
  try {
    CensusBrute(FieldSpec::Prime(2), 9, opts);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_NO_THROW(CensusBrute(FieldSpec::Prime(2), 7, opts));
}

TEST(Verify, SmallGridPasses) {
  CensusOptions opts;
  opts.check_factorization = true;
  opts.check_oracle = true;
  const auto report = Verify(FieldSpec::Parse("4"), 5, opts);
  EXPECT_TRUE(report.passed);
  ASSERT_EQ(report.degrees.size(), 6u);
  for (const auto& d : report.degrees) {
    EXPECT_TRUE(d.passed()) << d.n;
    EXPECT_FALSE(d.counterexample);
  }
  EXPECT_EQ(report.field, "2^2;modulus=1,1,1");
}

}  // namespace
}  // namespace selfrecip
