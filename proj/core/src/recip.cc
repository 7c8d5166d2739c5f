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

#include "selfrecip/recip.h"

#include <algorithm>
#include <map>
#include <set>

#include "selfrecip/errors.h"
#include "selfrecip/poly_format.h"

namespace selfrecip {
namespace {

void RequireMonicNonzeroConstant(const Polynomial& f) {
  if (!f.IsMonic()) Throw(ErrorCode::kNotMonic, FormatCodeList(f) + " is not monic");
  if (f.constant_coeff() == 0) {
    Throw(ErrorCode::kZeroConstantTerm, FormatCodeList(f) + " has zero constant coefficient");
  }
}

// No irreducibility check; callers pass factors out of Factor().
SelfAssocClass ClassifyUnchecked(const Polynomial& g) {
  const Polynomial rev = ReciprocalRaw(g);
  if (rev == g) return {SelfAssocTag::kStrictPalindrome, std::nullopt};
  if (rev == -g) return {SelfAssocTag::kAntiPalindrome, std::nullopt};
  return {SelfAssocTag::kPaired, MakeMonic(rev)};
}

// Exponent of each factor in the maximal self-reciprocal divisor.
std::vector<int> Contributions(const Factorization& fac, std::vector<SelfAssocClass>& classes) {
  std::map<Polynomial, std::size_t> index;
  for (std::size_t i = 0; i < fac.factors.size(); ++i) index.emplace(fac.factors[i].factor, i);
  classes.clear();
  std::vector<int> contributed(fac.factors.size(), 0);
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const auto& [g, e] = fac.factors[i];
    if (g.constant_coeff() == 0) Throw(ErrorCode::kZeroConstantTerm, "x divides the input");
    classes.push_back(ClassifyUnchecked(g));
    switch (classes.back().tag) {
      case SelfAssocTag::kStrictPalindrome:
        contributed[i] = e;
        break;
      case SelfAssocTag::kAntiPalindrome:
        contributed[i] = e - e % 2;
        break;
      case SelfAssocTag::kPaired: {
        auto it = index.find(*classes.back().partner);
        if (it != index.end()) contributed[i] = std::min(e, fac.factors[it->second].multiplicity);
        break;
      }
    }
  }
  return contributed;
}

}  // namespace

std::string_view SelfAssocTagName(SelfAssocTag tag) {
  switch (tag) {
    case SelfAssocTag::kStrictPalindrome: return "StrictPalindrome";
    case SelfAssocTag::kAntiPalindrome: return "AntiPalindrome";
    case SelfAssocTag::kPaired: return "Paired";
  }
  return "Unknown";
}

bool IsSelfReciprocal(const Polynomial& f) {
  RequireMonicNonzeroConstant(f);
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

SelfAssocClass ClassifyIrreducible(const Polynomial& g) {
  if (g == Polynomial::X(g.spec())) Throw(ErrorCode::kFactorIsX, "x has no reciprocal");
  if (!g.IsMonic()) Throw(ErrorCode::kNotMonic, FormatCodeList(g) + " is not monic");
  if (!IsIrreducible(g)) Throw(ErrorCode::kNotIrreducible, FormatCodeList(g) + " is reducible");
  return ClassifyUnchecked(g);
}

SelfReciprocalSplit MaxSelfReciprocalFactor(const Polynomial& f) {
  RequireMonicNonzeroConstant(f);
  return MaxSelfReciprocalFactor(Factor(f));
}

SelfReciprocalSplit MaxSelfReciprocalFactor(const Factorization& factorization) {
  std::vector<SelfAssocClass> classes;
  const std::vector<int> contributed = Contributions(factorization, classes);
  const FieldSpec& spec = factorization.unit.spec();
  SelfReciprocalSplit split{Polynomial::One(spec), Polynomial::Constant(spec, factorization.unit.code())};
  for (std::size_t i = 0; i < factorization.factors.size(); ++i) {
    const auto& [g, e] = factorization.factors[i];
    split.factor = split.factor * Power(g, contributed[i]);
    split.cofactor = split.cofactor * Power(g, e - contributed[i]);
  }
  return split;
}

int MaxSelfReciprocalDegree(const Factorization& factorization) {
  std::vector<SelfAssocClass> classes;
  const std::vector<int> contributed = Contributions(factorization, classes);
  int degree = 0;
  for (std::size_t i = 0; i < contributed.size(); ++i) {
    degree += contributed[i] * factorization.factors[i].factor.degree();
  }
  return degree;
}

std::vector<Polynomial> MaxSelfReciprocalFactorOracle(const Polynomial& f) {
  RequireMonicNonzeroConstant(f);
  const Factorization fac = Factor(f);
  const FieldSpec& spec = f.spec();
  std::vector<int> exps(fac.factors.size(), 0);
  std::set<Polynomial> best;
  int best_degree = -1;
  while (true) {
    Polynomial d = Polynomial::One(spec);
    for (std::size_t i = 0; i < exps.size(); ++i) d = d * Power(fac.factors[i].factor, exps[i]);
    if (IsSelfReciprocal(d)) {
      if (d.degree() > best_degree) {
        best.clear();
        best_degree = d.degree();
      }
      if (d.degree() == best_degree) best.insert(d);
    }
    std::size_t i = 0;
    while (i < exps.size() && ++exps[i] > fac.factors[i].multiplicity) exps[i++] = 0;
    if (i == exps.size()) break;
  }
  return {best.begin(), best.end()};
}

bool HasSelfReciprocalFactor(const Polynomial& f, int min_degree) {
  if (min_degree < 1) Throw(ErrorCode::kBadRange, "min_degree must be >= 1");
  return MaxSelfReciprocalFactor(f).factor.degree() >= min_degree;
}

ReciprocalReport AnalyzeReciprocal(const Polynomial& f) {
  RequireMonicNonzeroConstant(f);
  Factorization fac = Factor(f);
  std::vector<SelfAssocClass> classes;
  const std::vector<int> contributed = Contributions(fac, classes);
  ReciprocalReport report{f, ReciprocalRaw(f), fac, MaxSelfReciprocalFactor(fac), {}};
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    report.breakdown.push_back(
        {fac.factors[i].factor, fac.factors[i].multiplicity, classes[i], contributed[i]});
  }
  return report;
}

}  // namespace selfrecip
