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

#include "selfrecip/index2.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "selfrecip/errors.h"
#include "selfrecip/recip.h"

namespace selfrecip {
namespace {

constexpr int kMaxCountOrder = 30;
constexpr int kMaxPeriodicityOrder = 20;
constexpr int kMaxNullity = 16;

const FieldSpec& F2() {
  static const FieldSpec spec = FieldSpec::Prime(2);
  return spec;
}

void RequireOrderAtLeastTwo(int m) {
  if (m < 2) Throw(ErrorCode::kOrderTooSmall, "index-2 systems of type (3) need m >= 2");
}

}  // namespace

KVector::KVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) Throw(ErrorCode::kBadRange, "empty k vector");
  if (order() > kMaxOrder) Throw(ErrorCode::kBadRange, "k vector order above 62");
  for (auto b : bits_) {
    if (b > 1) Throw(ErrorCode::kBadRange, "k vector entries are bits");
  }
  if (bits_.front() != 1 || bits_.back() != 1) {
    Throw(ErrorCode::kBadRange, "k vector needs k0 = km = 1");
  }
}

KVector KVector::Parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') Throw(ErrorCode::kParseError, "k vector must be a bitstring");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return KVector(std::move(bits));
}

std::string KVector::ToString() const {
  std::string s;
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Polynomial KVector::ToPolynomial() const {
  return Polynomial(F2(), std::vector<Code>(bits_.begin(), bits_.end()));
}

bool operator<(const KVector& a, const KVector& b) {
  if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
  return a.bits_ < b.bits_;
}

IndexTwoSolution::IndexTwoSolution(std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> taps)
    : prefix_(std::move(prefix)), taps_(std::move(taps)), memo_(prefix_) {
  if (prefix_.empty() || prefix_[0] != 0) Throw(ErrorCode::kBadRange, "sequence needs a0 = 0");
}

void IndexTwoSolution::Extend(std::size_t count) const {
  while (memo_.size() < count) {
    const std::size_t i = memo_.size();
    std::uint8_t v = 0;
    for (std::size_t j = 1; j <= taps_.size() && j <= i; ++j) v ^= taps_[j - 1] & memo_[i - j];
    memo_.push_back(v);
  }
}

std::uint8_t IndexTwoSolution::At(std::size_t i) const {
  Extend(i + 1);
  return memo_[i];
}

std::vector<std::uint8_t> IndexTwoSolution::Take(std::size_t count) const {
  Extend(count);
  return {memo_.begin(), memo_.begin() + static_cast<std::ptrdiff_t>(count)};
}

Gf2System BuildSystemMatrix(const KVector& k) {
  const int m = k.order();
  RequireOrderAtLeastTwo(m);
  Gf2System system(m);
  for (int i = 1; i <= m; ++i) {
    std::uint64_t row = 0;
    for (int j = 0; j <= m; ++j) {
      const int u = std::abs(i - j);
      if (u >= 1 && k[j]) row ^= std::uint64_t{1} << (u - 1);
    }
    system.AddEquation(row, i == 1);
  }
  return system;
}

std::vector<IndexTwoSolution> SolveIndexTwo(const KVector& k) {
  const int m = k.order();
  if (m == 0) return {IndexTwoSolution({0, 1}, {})};
  if (m == 1) return {IndexTwoSolution({0, 1}, {1})};

  const Gf2System::Solution sol = BuildSystemMatrix(k).Solve();
  if (!sol.particular) return {};
  if (sol.kernel.size() > kMaxNullity) {
    Throw(ErrorCode::kBadRange, "solution space too large to enumerate");
  }
  const std::vector<std::uint8_t> taps(k.bits().begin() + 1, k.bits().end());
  std::vector<IndexTwoSolution> out;
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << sol.kernel.size()); ++combo) {
    std::uint64_t x = *sol.particular;
    for (std::size_t b = 0; b < sol.kernel.size(); ++b) {
      if (combo >> b & 1) x ^= sol.kernel[b];
    }
    std::vector<std::uint8_t> prefix(m + 1, 0);
    for (int u = 1; u <= m; ++u) prefix[u] = x >> (u - 1) & 1;
    IndexTwoSolution a(std::move(prefix), taps);
    if (!ResidualsHold(k, a, 4 * m)) {
      throw std::logic_error("index-2 solution fails the residual guard for k=" + k.ToString());
    }
    out.push_back(std::move(a));
  }
  return out;
}

bool ResidualsHold(const KVector& k, const IndexTwoSolution& a, int through) {
  const int m = k.order();
  for (int i = 1; i <= through; ++i) {
    std::uint8_t sum = 0;
    for (int j = 0; j <= m; ++j) sum ^= k[j] & a.At(static_cast<std::size_t>(std::abs(i - j)));
    if (sum != (i == 1 ? 1 : 0)) return false;
  }
  return true;
}

bool CoincidesWithSpecialForm(const IndexTwoSolution& a, int m) {
  // 2m + 3 terms pin down an order-m recurrence on either form.
  const std::size_t len = 2 * static_cast<std::size_t>(std::max(m, 1)) + 3;
  const auto terms = a.Take(len);
  bool single = true;
  bool ones = true;
  for (std::size_t i = 1; i < len; ++i) {
    single = single && terms[i] == (i == 1 ? 1 : 0);
    ones = ones && terms[i] == 1;
  }
  return single || ones;
}

bool PalindromeCondition(const KVector& k) {
  RequireOrderAtLeastTwo(k.order());
  const Polynomial factor = MaxSelfReciprocalFactor(k.ToPolynomial()).factor;
  return factor.IsOne() || factor == Polynomial(F2(), {1, 1});
}

IndexTwoCount CountIndexTwo(int m) {
  RequireOrderAtLeastTwo(m);
  if (m > kMaxCountOrder) Throw(ErrorCode::kBadRange, "count_index2 supports m <= 30");
  IndexTwoCount result;
  result.m = m;
  const std::uint64_t combos = std::uint64_t{1} << (m - 1);
  std::vector<std::uint8_t> bits(m + 1, 0);
  bits[0] = 1;
  bits[m] = 1;
  for (std::uint64_t v = 0; v < combos; ++v) {
    // k1 is the most significant of the middle bits.
    for (int j = 1; j < m; ++j) bits[j] = v >> (m - 1 - j) & 1;
    KVector k(bits);
    if (!SolveIndexTwo(k).empty()) result.admissible.push_back(std::move(k));
  }
  result.count = result.admissible.size();
  return result;
}

PeriodicityReport AnalyzePeriodicity(const KVector& k, const IndexTwoSolution& a) {
  const int m = k.order();
  if (m > kMaxPeriodicityOrder) Throw(ErrorCode::kBadRange, "periodicity analysis supports m <= 20");
  const int w = std::max(m, 1);
  const std::size_t start = a.prefix().size() - static_cast<std::size_t>(w);
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;

  std::vector<std::int64_t> seen(std::size_t{1} << w, -1);
  std::uint64_t state = 0;
  for (int b = 0; b < w; ++b) state |= std::uint64_t{a.At(start + b)} << b;
  std::size_t i = start;
  while (seen[state] < 0) {
    seen[state] = static_cast<std::int64_t>(i);
    state = (state >> 1) | (std::uint64_t{a.At(i + w)} << (w - 1));
    state &= mask;
    ++i;
  }
  PeriodicityReport report;
  report.period = i - static_cast<std::size_t>(seen[state]);
  std::size_t mu = static_cast<std::size_t>(seen[state]);
  while (mu > 0 && a.At(mu - 1) == a.At(mu - 1 + report.period)) --mu;
  report.preperiod = mu;

  auto purely_periodic = [&](int lead) {
    const std::size_t ell = static_cast<std::size_t>(std::max(lead, 0));
    auto term = [&](std::size_t t) { return t < ell ? a.At(ell - t) : a.At(t - ell); };
    for (std::size_t t = 0; t < ell + report.preperiod + report.period; ++t) {
      if (term(t) != term(t + report.period)) return false;
    }
    return true;
  };
  report.s1_purely_periodic = purely_periodic(m - 1);
  report.s2_purely_periodic = purely_periodic(m - 2);
  return report;
}

}  // namespace selfrecip
