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

#ifndef SELFRECIP_RECIP_H_
#define SELFRECIP_RECIP_H_

#include <optional>
#include <string_view>
#include <vector>

#include "selfrecip/poly.h"

namespace selfrecip {

// How a monic irreducible g (other than x) relates to its reciprocal.
enum class SelfAssocTag {
  kStrictPalindrome,  // g* == g
  kAntiPalindrome,    // g* == -g, odd characteristic only (g = x - 1)
  kPaired,            // monic reciprocal is a different irreducible
};

std::string_view SelfAssocTagName(SelfAssocTag tag);

struct SelfAssocClass {
  SelfAssocTag tag;
  std::optional<Polynomial> partner;  // set for kPaired only
};

// Strict palindrome test a_i == a_{n-i}. Requires f monic (NotMonic) with a
// nonzero constant (ZeroConstantTerm). In odd characteristic x - 1 fails.
bool IsSelfReciprocal(const Polynomial& f);

// Requires g monic irreducible; g == x throws FactorIsX.
SelfAssocClass ClassifyIrreducible(const Polynomial& g);

struct SelfReciprocalSplit {
  Polynomial factor;    // monic self-reciprocal, maximal degree
  Polynomial cofactor;  // f / factor, no self-reciprocal divisor but 1
};

// Built from the factorization: palindromic g^e contributes g^e, x - 1
// contributes its largest even power, and a paired (g, g^) with multiplicities
// (e, e^) contributes (g g^)^min(e, e^).
SelfReciprocalSplit MaxSelfReciprocalFactor(const Polynomial& f);
// Same rule, starting from an existing factorization of a monic f.
SelfReciprocalSplit MaxSelfReciprocalFactor(const Factorization& factorization);
// Degree of the maximal factor without forming it.
int MaxSelfReciprocalDegree(const Factorization& factorization);

// Brute-force reference: every monic divisor is formed from the exponent
// tuples of Factor(f); returns all self-reciprocal ones of maximal degree.
std::vector<Polynomial> MaxSelfReciprocalFactorOracle(const Polynomial& f);

bool HasSelfReciprocalFactor(const Polynomial& f, int min_degree);

struct FactorClassEntry {
  Polynomial factor;
  int multiplicity;
  SelfAssocClass cls;
  int contributed;  // exponent of `factor` inside the maximal factor
};

// Everything the CLI prints about one polynomial.
struct ReciprocalReport {
  Polynomial input;
  Polynomial reciprocal;  // raw f*
  Factorization factorization;
  SelfReciprocalSplit split;
  std::vector<FactorClassEntry> breakdown;
};

ReciprocalReport AnalyzeReciprocal(const Polynomial& f);

}  // namespace selfrecip

#endif  // SELFRECIP_RECIP_H_
