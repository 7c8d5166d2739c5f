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

#include "selfrecip/gf.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "selfrecip/errors.h"

namespace selfrecip {
namespace {

constexpr std::uint64_t kMaxOrder = std::numeric_limits<std::int32_t>::max();

// Remainder of `num` modulo the monic `den`, all coefficients in [0, p).
std::vector<std::uint32_t> RemMonicModP(std::vector<std::uint32_t> num,
                                        std::span<const std::uint32_t> den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t top = num.size(); top-- > dd;) {
    const std::uint64_t c = num[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::size_t at = top - dd + i;
      num[at] = static_cast<std::uint32_t>((num[at] + (p - c) * den[i]) % p);
    }
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

bool AllZero(const std::vector<std::uint32_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t ParseUnsigned(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    Throw(ErrorCode::kParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool IsIrreducibleOverPrime(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
  if (!IsPrime(p)) Throw(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (coeffs.size() < 2 || coeffs.back() != 1) {
    Throw(ErrorCode::kNotMonic, "irreducibility test needs a monic polynomial of degree >= 1");
  }
  for (std::uint32_t c : coeffs) {
    if (c >= p) Throw(ErrorCode::kBadRange, "coefficient out of range for F_" + std::to_string(p));
  }
  const std::size_t degree = coeffs.size() - 1;
  const std::vector<std::uint32_t> f(coeffs.begin(), coeffs.end());
  std::vector<std::uint32_t> divisor;
  for (std::size_t e = 1; e <= degree / 2; ++e) {
    divisor.assign(e + 1, 0);
    divisor[e] = 1;
    // Odometer over the e low coefficients.
    while (true) {
      if (AllZero(RemMonicModP(f, divisor, p))) return false;
      std::size_t i = 0;
      while (i < e && ++divisor[i] == p) divisor[i++] = 0;
      if (i == e) break;
    }
  }
  return true;
}

FieldSpec FieldSpec::Prime(std::uint64_t p) { return Extension(p, 1); }

FieldSpec FieldSpec::Extension(std::uint64_t p, int k,
                               std::optional<std::vector<std::uint32_t>> modulus) {
  if (!IsPrime(p)) Throw(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (k < 1) Throw(ErrorCode::kBadDegree, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) Throw(ErrorCode::kBadRange, "field order exceeds 2^31");
  }
  const auto prime = static_cast<std::uint32_t>(p);

  if (modulus) {
    if (modulus->size() != static_cast<std::size_t>(k) + 1) {
      Throw(ErrorCode::kBadDegree, "modulus must have degree exactly k");
    }
    if (modulus->back() != 1) Throw(ErrorCode::kNotMonic, "modulus must be monic");
    if (!IsIrreducibleOverPrime(prime, *modulus)) {
      Throw(ErrorCode::kNotIrreducible, "supplied modulus is reducible over F_" + std::to_string(p));
    }
  }
  if (k == 1) return Build(prime, 1, {0, 1});
  if (modulus) return Build(prime, k, std::move(*modulus));

  // Candidates in lexicographic order of (a0, ..., a_{k-1}): a0 is the most
  // significant digit of the counter. a0 = 0 is divisible by x, so start at 1.
  std::vector<std::uint32_t> candidate(k + 1, 0);
  candidate[0] = 1;
  candidate[k] = 1;
  while (true) {
    if (IsIrreducibleOverPrime(prime, candidate)) return Build(prime, k, candidate);
    int i = k - 1;
    while (i >= 0 && ++candidate[i] == prime) candidate[i--] = 0;
    if (i < 0) break;
  }
  // Irreducibles of every degree exist over every prime field.
  Throw(ErrorCode::kNotIrreducible, "no irreducible modulus found");
}

FieldSpec FieldSpec::Build(std::uint32_t p, int k, std::vector<std::uint32_t> modulus) {
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  std::uint32_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  data->q = q;
  data->modulus = std::move(modulus);
  FieldSpec raw(data);
  if (q <= detail::FieldData::kTableLimit) {
    data->add.resize(std::size_t{q} * q);
    data->mul.resize(std::size_t{q} * q);
    data->neg.resize(q);
    data->inv.resize(q);
    for (Code a = 0; a < q; ++a) {
      data->neg[a] = raw.NegSlow(a);
      for (Code b = 0; b < q; ++b) {
        data->add[a * q + b] = raw.AddSlow(a, b);
        data->mul[a * q + b] = raw.MulSlow(a, b);
      }
    }
    for (Code a = 1; a < q; ++a) {
      for (Code b = 1; b < q; ++b) {
        if (data->mul[a * q + b] == 1) {
          data->inv[a] = b;
          break;
        }
      }
    }
    data->tabulated = true;
  }
  return FieldSpec(std::move(data));
}

FieldSpec FieldSpec::Parse(std::string_view descriptor) {
  std::string_view text = Trim(descriptor);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto semi = text.find(';'); semi != std::string_view::npos) {
    std::string_view option = Trim(text.substr(semi + 1));
    text = Trim(text.substr(0, semi));
    constexpr std::string_view kKey = "modulus=";
    if (option.substr(0, kKey.size()) != kKey) {
      Throw(ErrorCode::kParseError, "unknown field option '" + std::string(option) + "'");
    }
    option.remove_prefix(kKey.size());
    modulus.emplace();
    while (true) {
      auto comma = option.find(',');
      modulus->push_back(static_cast<std::uint32_t>(
          ParseUnsigned(Trim(option.substr(0, comma)), "modulus coefficient")));
      if (comma == std::string_view::npos) break;
      option.remove_prefix(comma + 1);
    }
  }

  std::uint64_t p = 0;
  int k = 0;
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    p = ParseUnsigned(Trim(text.substr(0, caret)), "characteristic");
    const std::uint64_t degree = ParseUnsigned(Trim(text.substr(caret + 1)), "extension degree");
    if (degree == 0 || degree > 64) Throw(ErrorCode::kBadDegree, "extension degree out of range");
    k = static_cast<int>(degree);
  } else {
    const std::uint64_t q = ParseUnsigned(text, "field order");
    if (q < 2) Throw(ErrorCode::kNotPrime, "field order must be a prime power");
    p = q;
    for (std::uint64_t d = 2; d <= q / d; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) Throw(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
  }
  if (modulus) {
    for (std::uint32_t c : *modulus) {
      if (c >= p) Throw(ErrorCode::kBadRange, "modulus coefficient out of range");
    }
  }
  return Extension(p, k, std::move(modulus));
}

std::string FieldSpec::Descriptor() const {
  std::ostringstream os;
  os << p() << '^' << k();
  if (k() > 1) {
    os << ";modulus=";
    for (std::size_t i = 0; i < modulus().size(); ++i) os << (i ? "," : "") << modulus()[i];
  }
  return os.str();
}

Code FieldSpec::AddSlow(Code a, Code b) const {
  const std::uint32_t p = data_->p;
  if (data_->k == 1) return static_cast<Code>((std::uint64_t{a} + b) % p);
  Code result = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < data_->k; ++i) {
    result += static_cast<Code>(((a % p + b % p) % p) * place);
    a /= p;
    b /= p;
    place *= p;
  }
  return result;
}

Code FieldSpec::NegSlow(Code a) const {
  const std::uint32_t p = data_->p;
  if (data_->k == 1) return a == 0 ? 0 : p - a;
  Code result = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < data_->k; ++i) {
    const std::uint32_t d = a % p;
    result += static_cast<Code>(((p - d) % p) * place);
    a /= p;
    place *= p;
  }
  return result;
}

Code FieldSpec::MulSlow(Code a, Code b) const {
  const std::uint64_t p = data_->p;
  if (data_->k == 1) return static_cast<Code>((std::uint64_t{a} * b) % p);
  const auto da = Digits(a);
  const auto db = Digits(b);
  const int k = data_->k;
  std::vector<std::uint32_t> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    }
  }
  const auto rem = RemMonicModP(std::move(prod), data_->modulus, data_->p);
  return FromDigits(rem);
}

Code FieldSpec::Inv(Code a) const {
  if (a == 0) Throw(ErrorCode::kDivisionByZero, "inverse of zero");
  if (data_->tabulated) return data_->inv[a];
  return Pow(a, std::uint64_t{data_->q} - 2);
}

Code FieldSpec::Pow(Code a, std::uint64_t e) const {
  Code result = 1;
  while (e > 0) {
    if (e & 1) result = Mul(result, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FieldSpec::Digits(Code a) const {
  std::vector<std::uint32_t> digits(data_->k);
  for (auto& d : digits) {
    d = a % data_->p;
    a /= data_->p;
  }
  return digits;
}

Code FieldSpec::FromDigits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > static_cast<std::size_t>(data_->k)) {
    Throw(ErrorCode::kBadRange, "too many digits for this field");
  }
  Code code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= data_->p) Throw(ErrorCode::kBadRange, "digit out of range");
    code = code * data_->p + digits[i];
  }
  return code;
}

FieldElement FieldSpec::Element(Code code) const { return FieldElement(*this, code); }
FieldElement FieldSpec::Zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::One() const { return FieldElement(*this, 1); }

std::vector<FieldElement> FieldSpec::Elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (Code c = 0; c < q(); ++c) out.emplace_back(*this, c);
  return out;
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.p() == b.p() && a.k() == b.k() && a.modulus() == b.modulus();
}

void RequireSameSpec(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    Throw(ErrorCode::kSpecMismatch, "operands over " + a.Descriptor() + " and " + b.Descriptor());
  }
}

FieldElement::FieldElement(FieldSpec spec, Code code) : spec_(std::move(spec)), code_(code) {
  if (code_ >= spec_.q()) {
    Throw(ErrorCode::kBadRange, "code " + std::to_string(code) + " outside F_" + std::to_string(spec_.q()));
  }
}

FieldElement FieldElement::Inverse() const { return FieldElement(spec_, spec_.Inv(code_)); }

FieldElement FieldElement::Pow(std::uint64_t e) const { return FieldElement(spec_, spec_.Pow(code_, e)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  RequireSameSpec(a.spec_, b.spec_);
  return FieldElement(a.spec_, a.spec_.Add(a.code_, b.code_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  RequireSameSpec(a.spec_, b.spec_);
  return FieldElement(a.spec_, a.spec_.Sub(a.code_, b.code_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  RequireSameSpec(a.spec_, b.spec_);
  return FieldElement(a.spec_, a.spec_.Mul(a.code_, b.code_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  RequireSameSpec(a.spec_, b.spec_);
  return FieldElement(a.spec_, a.spec_.Mul(a.code_, a.spec_.Inv(b.code_)));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.code(); }

}  // namespace selfrecip
