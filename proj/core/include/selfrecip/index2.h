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

#ifndef SELFRECIP_INDEX2_H_
#define SELFRECIP_INDEX2_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "selfrecip/gf2_linear.h"
#include "selfrecip/poly.h"

namespace selfrecip {

// Coefficient vector [k0, ..., km] over GF(2) with k0 = km = 1.
class KVector {
 public:
  static constexpr int kMaxOrder = 62;

  // BadRange unless bits[0] == bits[m] == 1 and every entry is 0/1.
  explicit KVector(std::vector<std::uint8_t> bits);
  // Bitstring "k0k1...km"; ParseError on other characters.
  static KVector Parse(std::string_view text);

  int order() const { return static_cast<int>(bits_.size()) - 1; }
  std::uint8_t operator[](int j) const { return bits_[j]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string ToString() const;
  // K(x) = k0 + k1 x + ... + km x^m over F_2.
  Polynomial ToPolynomial() const;

  friend bool operator==(const KVector&, const KVector&) = default;
  // Ascending integer value of the bitstring k0...km (k0 most significant).
  friend bool operator<(const KVector& a, const KVector& b);

 private:
  std::vector<std::uint8_t> bits_;
};

// The symmetric sequence (a) with a0 = 0: explicit prefix, then the
// recurrence a_i = sum_j taps[j-1] a_{i-j} (mod 2).
class IndexTwoSolution {
 public:
  IndexTwoSolution(std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> taps);

  const std::vector<std::uint8_t>& prefix() const { return prefix_; }
  const std::vector<std::uint8_t>& taps() const { return taps_; }
  // a_i for i >= 0; a_{-i} = a_i.
  std::uint8_t At(std::size_t i) const;
  std::vector<std::uint8_t> Take(std::size_t count) const;

  friend bool operator==(const IndexTwoSolution&, const IndexTwoSolution&) = default;

 private:
  void Extend(std::size_t count) const;

  std::vector<std::uint8_t> prefix_;
  std::vector<std::uint8_t> taps_;
  mutable std::vector<std::uint8_t> memo_;
};

// Equations i = 1..m of delta_{i,1} = sum_j k_j a_{|i-j|} in the unknowns
// a_1..a_m (bit u-1 of row i-1 holds the coefficient of a_u); a_0 = 0.
// OrderTooSmall for m < 2.
Gf2System BuildSystemMatrix(const KVector& k);

// m = 0 and m = 1 return the fixed sequences 0100... and 0111...; for m >= 2,
// every solution of the finite system extended by the recurrence. Empty
// means unsolvable.
std::vector<IndexTwoSolution> SolveIndexTwo(const KVector& k);

// Checks equations i = 1..through exactly.
bool ResidualsHold(const KVector& k, const IndexTwoSolution& a, int through);

// True iff the solution is the sequence 0100... or 0111....
bool CoincidesWithSpecialForm(const IndexTwoSolution& a, int m);

// K(x)'s maximal self-reciprocal factor is 1 or exactly x + 1. m >= 2.
bool PalindromeCondition(const KVector& k);

struct IndexTwoCount {
  int m = 0;
  std::uint64_t count = 0;
  std::vector<KVector> admissible;  // ascending
};

// Every k with k0 = km = 1 tried; OrderTooSmall for m < 2.
IndexTwoCount CountIndexTwo(int m);

struct PeriodicityReport {
  std::uint64_t period = 0;     // least eventual period of a_0, a_1, ...
  std::uint64_t preperiod = 0;  // of the same forward sequence
  bool s1_purely_periodic = false;  // a_{m-1}, ..., a_1, a_0, a_1, ...
  bool s2_purely_periodic = false;  // a_{m-2}, ..., a_1, a_0, a_1, ...
};

// Cycle detection on windows of max(m, 1) consecutive terms; m <= 20.
PeriodicityReport AnalyzePeriodicity(const KVector& k, const IndexTwoSolution& a);

}  // namespace selfrecip

#endif  // SELFRECIP_INDEX2_H_
