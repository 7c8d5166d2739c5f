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

#ifndef SELFRECIP_POLY_FORMAT_H_
#define SELFRECIP_POLY_FORMAT_H_

#include <string>
#include <string_view>

#include "selfrecip/gf.h"

namespace selfrecip {

class Polynomial;

// Canonical text form: "[a0,a1,...,an]" of coefficient codes; zero is "[]".
std::string FormatCodeList(const Polynomial& f);

// Human form, highest degree first: "x^3+2*x+1"; zero is "0".
std::string FormatHuman(const Polynomial& f);

// F_2 only: "a0a1...an"; zero is "0".
std::string FormatBitstring(const Polynomial& f);

// Accepts any of the three forms. A string of 0/1 digits is read as a
// bitstring when q == 2 and as a constant code otherwise.
Polynomial ParsePolynomial(const FieldSpec& spec, std::string_view text);

}  // namespace selfrecip

#endif  // SELFRECIP_POLY_FORMAT_H_
