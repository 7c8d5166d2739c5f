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

#include "selfrecip/gf2_linear.h"

#include "selfrecip/errors.h"

namespace selfrecip {

Gf2System::Gf2System(int unknowns) : unknowns_(unknowns) {
  if (unknowns < 0 || unknowns > kMaxUnknowns) {
    Throw(ErrorCode::kBadRange, "GF(2) system supports 0..64 unknowns");
  }
}

void Gf2System::AddEquation(std::uint64_t coefficients, bool rhs) {
  if (unknowns_ < kMaxUnknowns && (coefficients >> unknowns_) != 0) {
    Throw(ErrorCode::kBadRange, "equation mentions an unknown past the system width");
  }
  rows_.push_back(coefficients);
  rhs_.push_back(rhs ? 1 : 0);
}

Gf2System::Solution Gf2System::Solve() const {
  std::vector<std::uint64_t> rows = rows_;
  std::vector<std::uint8_t> rhs = rhs_;
  std::vector<int> pivot_col;  // pivot column of reduced row r
  std::size_t r = 0;
  for (int col = 0; col < unknowns_ && r < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    std::swap(rhs[pivot], rhs[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] & bit)) {
        rows[i] ^= rows[r];
        rhs[i] ^= rhs[r];
      }
    }
    pivot_col.push_back(col);
    ++r;
  }

  Solution sol;
  sol.rank = static_cast<int>(r);
  std::uint64_t pivots = 0;
  std::uint64_t particular = 0;
  for (std::size_t i = 0; i < r; ++i) {
    pivots |= std::uint64_t{1} << pivot_col[i];
    if (rhs[i]) particular |= std::uint64_t{1} << pivot_col[i];
  }
  for (int free = 0; free < unknowns_; ++free) {
    const std::uint64_t bit = std::uint64_t{1} << free;
    if (pivots & bit) continue;
    std::uint64_t v = bit;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i] & bit) v |= std::uint64_t{1} << pivot_col[i];
    }
    sol.kernel.push_back(v);
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rhs[i]) return sol;  // 0 = 1
  }
  sol.particular = particular;
  return sol;
}

}  // namespace selfrecip
