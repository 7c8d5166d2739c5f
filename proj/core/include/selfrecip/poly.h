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

#ifndef SELFRECIP_POLY_H_
#define SELFRECIP_POLY_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

#include "selfrecip/gf.h"

namespace selfrecip {

// Degree reported for the zero polynomial; below every real degree.
inline constexpr int kZeroDegree = -1;

// Dense univariate polynomial over a FieldSpec, coefficients ascending as
// canonical codes. Normal form: no trailing zero codes (zero is empty).
class Polynomial {
 public:
  explicit Polynomial(FieldSpec spec) : spec_(std::move(spec)) {}
  Polynomial(FieldSpec spec, std::vector<Code> coeffs);

  static Polynomial Constant(const FieldSpec& spec, Code c);
  static Polynomial Monomial(const FieldSpec& spec, Code c, int degree);
  static Polynomial X(const FieldSpec& spec) { return Monomial(spec, 1, 1); }
  static Polynomial One(const FieldSpec& spec) { return Constant(spec, 1); }

  const FieldSpec& spec() const { return spec_; }
  const std::vector<Code>& coeffs() const { return coeffs_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  bool IsOne() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool IsMonic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Zero past the degree.
  Code coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  Code leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Code constant_coeff() const { return coeffs_.empty() ? 0 : coeffs_.front(); }
  FieldElement Coefficient(int i) const { return spec_.Element(coeff(i)); }

  Polynomial Scaled(Code c) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.coeffs_ == g.coeffs_ && f.spec_ == g.spec_;
  }
  // Degree first, then coefficient codes from the top down (the order in
  // which EnumerateMonic yields them).
  friend bool operator<(const Polynomial& f, const Polynomial& g);

 private:
  friend class MonicEnumerator;
  void Trim();

  FieldSpec spec_;
  std::vector<Code> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

// f = quotient * g + remainder, deg remainder < deg g. Throws DivisionByZero.
DivModResult DivMod(const Polynomial& f, const Polynomial& g);

FieldElement Evaluate(const Polynomial& f, const FieldElement& x);
Polynomial MakeMonic(const Polynomial& f);
Polynomial Power(const Polynomial& f, int e);

// Monic gcd by Euclid. gcd(f, 0) = MakeMonic(f); throws BothZero.
Polynomial GcdMonic(const Polynomial& f, const Polynomial& g);

// f*(x) = x^n f(1/x): the reversed coefficient list. Requires a nonzero
// constant coefficient so the degree is preserved (ZeroConstantTerm).
Polynomial ReciprocalRaw(const Polynomial& f);
Polynomial ReciprocalMonic(const Polynomial& f);

// Streams monic polynomials of degree n in ascending order of
// sum(code_i * q^i); with nonzero_constant the constant ranges over 1..q-1.
// The current polynomial is updated in place.
class MonicEnumerator {
 public:
  MonicEnumerator(FieldSpec spec, int n, bool nonzero_constant);

  // Number of polynomials in the full stream, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  // Position the cursor at the given stream index.
  void Seek(std::uint64_t index);
  std::uint64_t index() const { return index_; }
  bool done() const { return index_ >= size_; }
  const Polynomial& current() const { return current_; }
  void Next();

 private:
  int n_;
  bool nonzero_constant_;
  std::uint64_t size_;
  std::uint64_t index_ = 0;
  Polynomial current_;
};

std::vector<Polynomial> EnumerateMonic(const FieldSpec& spec, int n, bool nonzero_constant);

// Complete list of monic irreducibles of degree 1..max_degree, built by sieve.
class IrreducibleTable {
 public:
  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  // Entries of one degree, in enumeration order.
  std::span<const Polynomial> OfDegree(int d) const;

 private:
  friend std::shared_ptr<const IrreducibleTable> IrreducibleTableFor(const FieldSpec&, int);
  std::vector<std::vector<Polynomial>> by_degree_;  // index 0 unused
};

// Cached per FieldSpec and safe to call from several threads; a larger request
// rebuilds the snapshot, earlier snapshots stay valid.
std::shared_ptr<const IrreducibleTable> IrreducibleTableFor(const FieldSpec& spec, int max_degree);

struct FactorPower {
  Polynomial factor;  // monic irreducible
  int multiplicity;
};

struct Factorization {
  FieldElement unit;
  std::vector<FactorPower> factors;  // by degree, then table order

  Polynomial Expand() const;
};

// Trial division against IrreducibleTableFor(spec, deg f / 2).
Factorization Factor(const Polynomial& f);
// Same, with a caller-held table (must reach deg f / 2).
Factorization Factor(const Polynomial& f, const IrreducibleTable& table);
bool IsIrreducible(const Polynomial& f);

}  // namespace selfrecip

#endif  // SELFRECIP_POLY_H_
