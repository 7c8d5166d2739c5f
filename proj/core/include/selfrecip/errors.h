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

#ifndef SELFRECIP_ERRORS_H_
#define SELFRECIP_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfrecip {

enum class ErrorCode {
  kNotPrime,
  kNotIrreducible,
  kBadDegree,
  kSpecMismatch,
  kDivisionByZero,
  kBothZero,
  kZeroConstantTerm,
  kNotMonic,
  kFactorIsX,
  kZeroPolynomial,
  kNonDivisible,
  kBadRange,
  kBudgetExceeded,
  kOrderTooSmall,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for every precondition failure in the library. The
// code is what callers branch on; the message is for humans.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Throw(ErrorCode code, const std::string& message);

}  // namespace selfrecip

#endif  // SELFRECIP_ERRORS_H_
