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

#include "selfrecip/poly_format.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "selfrecip/errors.h"
#include "selfrecip/poly.h"

namespace selfrecip {
namespace {

std::string Strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::uint64_t ParseNumber(std::string_view text, std::string_view context) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    Throw(ErrorCode::kParseError, "bad number '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

Code CheckedCode(const FieldSpec& spec, std::uint64_t value) {
  if (value >= spec.q()) {
    Throw(ErrorCode::kParseError,
          "coefficient " + std::to_string(value) + " is not a code of F_" + std::to_string(spec.q()));
  }
  return static_cast<Code>(value);
}

Polynomial ParseCodeList(const FieldSpec& spec, std::string_view body) {
  std::vector<Code> coeffs;
  if (!body.empty()) {
    while (true) {
      auto comma = body.find(',');
      coeffs.push_back(CheckedCode(spec, ParseNumber(body.substr(0, comma), "code list")));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  }
  return Polynomial(spec, std::move(coeffs));
}

// term := code | [code '*'] 'x' ['^' degree]
Polynomial ParseHuman(const FieldSpec& spec, std::string_view text) {
  std::map<int, Code> terms;
  while (true) {
    auto plus = text.find('+');
    std::string_view term = text.substr(0, plus);
    if (term.empty()) Throw(ErrorCode::kParseError, "empty term in polynomial");
    Code c = 1;
    int degree = 0;
    auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      c = CheckedCode(spec, ParseNumber(term, "constant term"));
    } else {
      if (xpos > 0) {
        if (term[xpos - 1] != '*') Throw(ErrorCode::kParseError, "expected '*' before x");
        c = CheckedCode(spec, ParseNumber(term.substr(0, xpos - 1), "coefficient"));
      }
      std::string_view rest = term.substr(xpos + 1);
      if (rest.empty()) {
        degree = 1;
      } else {
        if (rest[0] != '^') Throw(ErrorCode::kParseError, "expected '^' after x");
        const std::uint64_t d = ParseNumber(rest.substr(1), "exponent");
        if (d > 1u << 20) Throw(ErrorCode::kParseError, "exponent too large");
        degree = static_cast<int>(d);
      }
    }
    auto [it, inserted] = terms.try_emplace(degree, c);
    if (!inserted) it->second = spec.Add(it->second, c);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  std::vector<Code> coeffs(terms.rbegin()->first + 1, 0);
  for (const auto& [d, c] : terms) coeffs[d] = c;
  return Polynomial(spec, std::move(coeffs));
}

}  // namespace

std::string FormatCodeList(const Polynomial& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? "," : "") << f.coeffs()[i];
  os << ']';
  return os.str();
}

std::string FormatHuman(const Polynomial& f) {
  if (f.IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = f.degree(); d >= 0; --d) {
    const Code c = f.coeff(d);
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (d == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

std::string FormatBitstring(const Polynomial& f) {
  if (f.spec().q() != 2) Throw(ErrorCode::kSpecMismatch, "bitstrings are defined over F_2 only");
  if (f.IsZero()) return "0";
  std::string out;
  for (Code c : f.coeffs()) out.push_back(c ? '1' : '0');
  return out;
}

Polynomial ParsePolynomial(const FieldSpec& spec, std::string_view text) {
  const std::string s = Strip(text);
  if (s.empty()) Throw(ErrorCode::kParseError, "empty polynomial");
  if (s.front() == '[') {
    if (s.back() != ']') Throw(ErrorCode::kParseError, "unterminated code list");
    return ParseCodeList(spec, std::string_view(s).substr(1, s.size() - 2));
  }
  const bool bits = std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
  if (bits && spec.q() == 2) {
    std::vector<Code> coeffs;
    for (char c : s) coeffs.push_back(c == '1' ? 1 : 0);
    return Polynomial(spec, std::move(coeffs));
  }
  return ParseHuman(spec, s);
}

}  // namespace selfrecip
