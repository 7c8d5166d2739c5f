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

#ifndef SELFRECIP_GF2_LINEAR_H_
#define SELFRECIP_GF2_LINEAR_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace selfrecip {

// Linear system over GF(2) with at most 64 unknowns; each row is one machine
// word, bit u set iff unknown u appears.
class Gf2System {
 public:
  static constexpr int kMaxUnknowns = 64;

  explicit Gf2System(int unknowns);

  void AddEquation(std::uint64_t coefficients, bool rhs);

  int unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  std::uint64_t row(std::size_t i) const { return rows_[i]; }
  bool rhs(std::size_t i) const { return rhs_[i] != 0; }

  struct Solution {
    int rank = 0;
    // Absent when the system is inconsistent.
    std::optional<std::uint64_t> particular;
    std::vector<std::uint64_t> kernel;  // basis of the null space
  };

  // Gauss-Jordan elimination, pivots taken on the lowest free column first.
  Solution Solve() const;

 private:
  int unknowns_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint8_t> rhs_;
};

}  // namespace selfrecip

#endif  // SELFRECIP_GF2_LINEAR_H_
