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

#ifndef SELFRECIP_TESTS_UNIT_TEST_UTIL_H_
#define SELFRECIP_TESTS_UNIT_TEST_UTIL_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "selfrecip/gf.h"
#include "selfrecip/poly.h"

namespace selfrecip::testing {

inline constexpr std::uint64_t kSeed = 0x5eed5eedULL;

// Polynomial from ascending codes.
inline Polynomial P(const FieldSpec& spec, std::initializer_list<Code> codes) {
  return Polynomial(spec, std::vector<Code>(codes));
}

// Every field of order <= 9.
inline std::vector<FieldSpec> SmallFields() {
  return {FieldSpec::Parse("2"), FieldSpec::Parse("3"), FieldSpec::Parse("4"),
          FieldSpec::Parse("5"), FieldSpec::Parse("7"), FieldSpec::Parse("8"),
          FieldSpec::Parse("9")};
}

inline Polynomial RandomPolynomial(const FieldSpec& spec, int degree, std::mt19937_64& rng,
                                   bool monic = false, bool nonzero_constant = false) {
  std::vector<Code> c(degree + 1);
  for (auto& x : c) x = static_cast<Code>(rng() % spec.q());
  if (monic) c[degree] = 1;
  while (c[degree] == 0) c[degree] = static_cast<Code>(rng() % spec.q());
  if (nonzero_constant && degree > 0) {
    while (c[0] == 0) c[0] = static_cast<Code>(rng() % spec.q());
  }
  return Polynomial(spec, std::move(c));
}

}  // namespace selfrecip::testing

#endif  // SELFRECIP_TESTS_UNIT_TEST_UTIL_H_
