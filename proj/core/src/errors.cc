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

#include "selfrecip/errors.h"

namespace selfrecip {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kBadDegree: return "BadDegree";
    case ErrorCode::kSpecMismatch: return "SpecMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::kNotMonic: return "NotMonic";
    case ErrorCode::kFactorIsX: return "FactorIsX";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNonDivisible: return "NonDivisible";
    case ErrorCode::kBadRange: return "BadRange";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOrderTooSmall: return "OrderTooSmall";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

AlgebraError::AlgebraError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message), code_(code) {}

void Throw(ErrorCode code, const std::string& message) { throw AlgebraError(code, message); }

}  // namespace selfrecip
