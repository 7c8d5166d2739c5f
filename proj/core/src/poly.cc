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

#include "selfrecip/poly.h"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "selfrecip/errors.h"
#include "selfrecip/poly_format.h"

namespace selfrecip {
namespace {

// Long division of f by the monic g. On return `rem` holds the remainder
// (resized to deg g) and `quot` the quotient; returns true iff the remainder
// is zero. Hot loop of the sieve and of trial-division factoring.
bool DivideByMonic(const FieldSpec& spec, std::span<const Code> f, std::span<const Code> g,
                   std::vector<Code>& quot, std::vector<Code>& rem) {
  const std::size_t dg = g.size() - 1;
  rem.assign(f.begin(), f.end());
  if (f.size() < g.size()) {
    quot.clear();
    return std::all_of(rem.begin(), rem.end(), [](Code c) { return c == 0; });
  }
  const std::size_t dq = f.size() - g.size();
  quot.assign(dq + 1, 0);
  for (std::size_t top = f.size(); top-- > dg;) {
    const Code c = rem[top];
    if (c == 0) continue;
    quot[top - dg] = c;
    const Code neg_c = spec.Neg(c);
    for (std::size_t i = 0; i < dg; ++i) {
      rem[top - dg + i] = spec.Add(rem[top - dg + i], spec.Mul(neg_c, g[i]));
    }
    rem[top] = 0;
  }
  rem.resize(dg);
  return std::all_of(rem.begin(), rem.end(), [](Code c) { return c == 0; });
}

std::uint64_t SaturatingPow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(FieldSpec spec, std::vector<Code> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  for (Code c : coeffs_) {
    if (c >= spec_.q()) {
      Throw(ErrorCode::kBadRange, "coefficient code " + std::to_string(c) + " outside F_" +
                                      std::to_string(spec_.q()));
    }
  }
  Trim();
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::Constant(const FieldSpec& spec, Code c) { return Polynomial(spec, {c}); }

Polynomial Polynomial::Monomial(const FieldSpec& spec, Code c, int degree) {
  if (degree < 0) Throw(ErrorCode::kBadDegree, "negative monomial degree");
  std::vector<Code> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(spec, std::move(coeffs));
}

Polynomial Polynomial::Scaled(Code c) const {
  Polynomial out(spec_);
  out.coeffs_.reserve(coeffs_.size());
  for (Code a : coeffs_) out.coeffs_.push_back(spec_.Mul(a, c));
  out.Trim();
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  RequireSameSpec(f.spec_, g.spec_);
  Polynomial out(f.spec_);
  out.coeffs_.resize(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    out.coeffs_[i] = f.spec_.Add(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
  }
  out.Trim();
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(spec_);
  out.coeffs_.reserve(coeffs_.size());
  for (Code a : coeffs_) out.coeffs_.push_back(spec_.Neg(a));
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  RequireSameSpec(f.spec_, g.spec_);
  Polynomial out(f.spec_);
  if (f.IsZero() || g.IsZero()) return out;
  const FieldSpec& spec = f.spec_;
  out.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = spec.Add(out.coeffs_[i + j], spec.Mul(f.coeffs_[i], g.coeffs_[j]));
    }
  }
  out.Trim();
  return out;
}

bool operator<(const Polynomial& f, const Polynomial& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  return std::lexicographical_compare(f.coeffs_.rbegin(), f.coeffs_.rend(), g.coeffs_.rbegin(),
                                      g.coeffs_.rend());
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << FormatCodeList(f); }

DivModResult DivMod(const Polynomial& f, const Polynomial& g) {
  RequireSameSpec(f.spec(), g.spec());
  if (g.IsZero()) Throw(ErrorCode::kDivisionByZero, "polynomial division by zero");
  const FieldSpec& spec = f.spec();
  if (f.degree() < g.degree()) return {Polynomial(spec), f};
  const Code lead_inv = spec.Inv(g.leading_coeff());
  const Polynomial monic_g = g.Scaled(lead_inv);
  std::vector<Code> quot;
  std::vector<Code> rem;
  DivideByMonic(spec, f.coeffs(), monic_g.coeffs(), quot, rem);
  // f = quot * monic_g + rem = (quot / lc) * g + rem.
  return {Polynomial(spec, std::move(quot)).Scaled(lead_inv), Polynomial(spec, std::move(rem))};
}

FieldElement Evaluate(const Polynomial& f, const FieldElement& x) {
  RequireSameSpec(f.spec(), x.spec());
  const FieldSpec& spec = f.spec();
  Code acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = spec.Add(spec.Mul(acc, x.code()), *it);
  }
  return spec.Element(acc);
}

Polynomial MakeMonic(const Polynomial& f) {
  if (f.IsZero() || f.IsMonic()) return f;
  return f.Scaled(f.spec().Inv(f.leading_coeff()));
}

Polynomial Power(const Polynomial& f, int e) {
  if (e < 0) Throw(ErrorCode::kBadRange, "negative exponent");
  Polynomial result = Polynomial::One(f.spec());
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial GcdMonic(const Polynomial& f, const Polynomial& g) {
  RequireSameSpec(f.spec(), g.spec());
  if (f.IsZero() && g.IsZero()) Throw(ErrorCode::kBothZero, "gcd(0, 0) is undefined");
  Polynomial a = f;
  Polynomial b = g;
  while (!b.IsZero()) {
    Polynomial r = DivMod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return MakeMonic(a);
}

Polynomial ReciprocalRaw(const Polynomial& f) {
  if (f.IsZero() || f.constant_coeff() == 0) {
    Throw(ErrorCode::kZeroConstantTerm, "reciprocal needs a nonzero constant coefficient");
  }
  std::vector<Code> rev(f.coeffs().rbegin(), f.coeffs().rend());
  return Polynomial(f.spec(), std::move(rev));
}

Polynomial ReciprocalMonic(const Polynomial& f) { return MakeMonic(ReciprocalRaw(f)); }

MonicEnumerator::MonicEnumerator(FieldSpec spec, int n, bool nonzero_constant)
    : n_(n), nonzero_constant_(nonzero_constant), current_(std::move(spec)) {
  if (n < 0) Throw(ErrorCode::kBadDegree, "degree must be >= 0");
  const std::uint64_t q = current_.spec().q();
  if (n == 0) {
    size_ = 1;
  } else if (nonzero_constant) {
    const std::uint64_t tail = SaturatingPow(q, n - 1);
    size_ = tail > std::numeric_limits<std::uint64_t>::max() / (q - 1)
                ? std::numeric_limits<std::uint64_t>::max()
                : tail * (q - 1);
  } else {
    size_ = SaturatingPow(q, n);
  }
  Seek(0);
}

void MonicEnumerator::Seek(std::uint64_t index) {
  index_ = index;
  const std::uint64_t q = current_.spec().q();
  auto& c = current_.coeffs_;
  c.assign(n_ + 1, 0);
  c[n_] = 1;
  if (n_ == 0) return;
  if (nonzero_constant_) {
    c[0] = static_cast<Code>(index % (q - 1) + 1);
    index /= q - 1;
  } else {
    c[0] = static_cast<Code>(index % q);
    index /= q;
  }
  for (int i = 1; i < n_; ++i) {
    c[i] = static_cast<Code>(index % q);
    index /= q;
  }
}

void MonicEnumerator::Next() {
  ++index_;
  if (n_ == 0 || done()) return;
  const Code q = current_.spec().q();
  auto& c = current_.coeffs_;
  const Code low = nonzero_constant_ ? 1 : 0;
  if (++c[0] < q) return;
  c[0] = low;
  for (int i = 1; i < n_; ++i) {
    if (++c[i] < q) return;
    c[i] = 0;
  }
}

std::vector<Polynomial> EnumerateMonic(const FieldSpec& spec, int n, bool nonzero_constant) {
  std::vector<Polynomial> out;
  for (MonicEnumerator it(spec, n, nonzero_constant); !it.done(); it.Next()) {
    out.push_back(it.current());
  }
  return out;
}

std::span<const Polynomial> IrreducibleTable::OfDegree(int d) const {
  if (d < 1 || d > max_degree()) {
    Throw(ErrorCode::kBadRange, "irreducible table has no degree " + std::to_string(d));
  }
  return by_degree_[d];
}

std::shared_ptr<const IrreducibleTable> IrreducibleTableFor(const FieldSpec& spec,
                                                            int max_degree) {
  if (max_degree < 1) max_degree = 1;
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const IrreducibleTable>> cache;

  std::lock_guard<std::mutex> lock(mu);
  const std::string key = spec.Descriptor();
  auto& slot = cache[key];
  if (slot && slot->max_degree() >= max_degree) return slot;

  auto table = std::make_shared<IrreducibleTable>();
  if (slot) {
    table->by_degree_ = slot->by_degree_;
  } else {
    table->by_degree_.resize(2);
    for (Code a = 0; a < spec.q(); ++a) {
      table->by_degree_[1].push_back(Polynomial(spec, {a, 1}));
    }
  }
  std::vector<Code> quot;
  std::vector<Code> rem;
  for (int d = table->max_degree() + 1; d <= max_degree; ++d) {
    std::vector<Polynomial> found;
    // Nonzero constant: x itself is the only irreducible with a zero constant.
    for (MonicEnumerator it(spec, d, true); !it.done(); it.Next()) {
      const auto& f = it.current().coeffs();
      bool irreducible = true;
      for (int e = 1; e <= d / 2 && irreducible; ++e) {
        for (const Polynomial& g : table->by_degree_[e]) {
          if (DivideByMonic(spec, f, g.coeffs(), quot, rem)) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) found.push_back(it.current());
    }
    table->by_degree_.push_back(std::move(found));
  }
  slot = table;
  return slot;
}

Polynomial Factorization::Expand() const {
  Polynomial out = Polynomial::Constant(unit.spec(), unit.code());
  for (const auto& [factor, multiplicity] : factors) out = out * Power(factor, multiplicity);
  return out;
}

Factorization Factor(const Polynomial& f) {
  if (f.IsZero()) Throw(ErrorCode::kZeroPolynomial, "cannot factor the zero polynomial");
  return Factor(f, *IrreducibleTableFor(f.spec(), std::max(1, f.degree() / 2)));
}

Factorization Factor(const Polynomial& f, const IrreducibleTable& table) {
  if (f.IsZero()) Throw(ErrorCode::kZeroPolynomial, "cannot factor the zero polynomial");
  const FieldSpec& spec = f.spec();
  if (table.max_degree() < f.degree() / 2) {
    Throw(ErrorCode::kBadRange, "irreducible table too small for degree " +
                                    std::to_string(f.degree()));
  }
  Factorization result{spec.Element(f.leading_coeff()), {}};
  std::vector<Code> rest = MakeMonic(f).coeffs();
  std::vector<Code> quot;
  std::vector<Code> rem;
  for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
    for (const Polynomial& g : table.OfDegree(d)) {
      if (2 * d > static_cast<int>(rest.size()) - 1) break;
      int multiplicity = 0;
      while (static_cast<int>(rest.size()) - 1 >= d &&
             DivideByMonic(spec, rest, g.coeffs(), quot, rem)) {
        rest.swap(quot);
        ++multiplicity;
      }
      if (multiplicity > 0) result.factors.push_back({g, multiplicity});
    }
  }
  if (rest.size() > 1) result.factors.push_back({Polynomial(spec, std::move(rest)), 1});
  return result;
}

bool IsIrreducible(const Polynomial& f) {
  if (f.IsZero()) Throw(ErrorCode::kZeroPolynomial, "zero is not irreducible");
  if (f.degree() < 1) return false;
  const Factorization fac = Factor(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace selfrecip
