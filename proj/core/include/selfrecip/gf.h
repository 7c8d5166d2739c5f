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

#ifndef SELFRECIP_GF_H_
#define SELFRECIP_GF_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selfrecip {

// Canonical code of a field element: sum of digits[i] * p^i, in [0, q).
using Code = std::uint32_t;

// Deterministic trial-division primality test.
bool IsPrime(std::uint64_t n);

// Irreducibility over the prime field F_p by trial division: true iff no monic
// polynomial of degree 1..floor(d/2) divides `coeffs`. Coefficients are
// ascending integer representatives in [0, p); the input must be monic with
// degree >= 1.
bool IsIrreducibleOverPrime(std::uint32_t p, std::span<const std::uint32_t> coeffs);

namespace detail {

// Shared immutable state behind a FieldSpec. Lookup tables are populated for
// small q (see kTableLimit); larger fields go through digit arithmetic.
struct FieldData {
  static constexpr std::uint32_t kTableLimit = 256;

  std::uint32_t p = 0;
  int k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // ascending, monic, length k + 1
  bool tabulated = false;
  std::vector<Code> add;  // q * q
  std::vector<Code> mul;  // q * q
  std::vector<Code> neg;  // q
  std::vector<Code> inv;  // q, inv[0] unused
};

}  // namespace detail

class FieldElement;

// The finite field F_{p^k} together with a fixed monic irreducible modulus.
// Cheap to copy; all copies share the same immutable tables.
class FieldSpec {
 public:
  static FieldSpec Prime(std::uint64_t p);

  // With no modulus, picks the monic irreducible of degree k whose ascending
  // coefficient tuple (a0, ..., a_{k-1}) is lexicographically least.
  static FieldSpec Extension(std::uint64_t p, int k,
                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  // Accepts "p^k", a bare prime power "q", and an optional
  // ";modulus=a0,a1,...,ak" suffix.
  static FieldSpec Parse(std::string_view descriptor);

  std::uint32_t p() const { return data_->p; }
  int k() const { return data_->k; }
  std::uint32_t q() const { return data_->q; }
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

  // "p^k", plus ";modulus=..." when k > 1. Parse(Descriptor()) == *this.
  std::string Descriptor() const;

  Code Add(Code a, Code b) const {
    return data_->tabulated ? data_->add[a * data_->q + b] : AddSlow(a, b);
  }
  Code Mul(Code a, Code b) const {
    return data_->tabulated ? data_->mul[a * data_->q + b] : MulSlow(a, b);
  }
  Code Neg(Code a) const { return data_->tabulated ? data_->neg[a] : NegSlow(a); }
  Code Sub(Code a, Code b) const { return Add(a, Neg(b)); }
  // Throws DivisionByZero for a == 0.
  Code Inv(Code a) const;
  Code Pow(Code a, std::uint64_t e) const;

  std::vector<std::uint32_t> Digits(Code a) const;
  Code FromDigits(std::span<const std::uint32_t> digits) const;

  FieldElement Element(Code code) const;
  FieldElement Zero() const;
  FieldElement One() const;
  // Every element once, ascending by canonical code.
  std::vector<FieldElement> Elements() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  static FieldSpec Build(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);

  Code AddSlow(Code a, Code b) const;
  Code NegSlow(Code a) const;
  Code MulSlow(Code a, Code b) const;

  std::shared_ptr<const detail::FieldData> data_;
};

// Throws SpecMismatch unless a == b.
void RequireSameSpec(const FieldSpec& a, const FieldSpec& b);

class FieldElement {
 public:
  FieldElement(FieldSpec spec, Code code);

  const FieldSpec& spec() const { return spec_; }
  Code code() const { return code_; }
  std::vector<std::uint32_t> digits() const { return spec_.Digits(code_); }
  bool IsZero() const { return code_ == 0; }

  FieldElement Inverse() const;
  FieldElement Pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return FieldElement(spec_, spec_.Neg(code_)); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.spec_ == b.spec_;
  }

 private:
  FieldSpec spec_;
  Code code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace selfrecip

#endif  // SELFRECIP_GF_H_
