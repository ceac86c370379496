// Copyright 2026 The ordchoquet Authors
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

#include "ordchoquet/rational.hpp"

#include "ordchoquet/error.hpp"

#include <cctype>
#include <cstdio>

namespace ordchoquet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySetInFamily: return "EmptySetInFamily";
    case ErrorCode::DuplicateSet: return "DuplicateSet";
    case ErrorCode::CoverViolation: return "CoverViolation";
    case ErrorCode::CycleInOrder: return "CycleInOrder";
    case ErrorCode::OrderContradictsContainment: return "OrderContradictsContainment";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeDensity: return "NegativeDensity";
    case ErrorCode::NegativeWeighting: return "NegativeWeighting";
    case ErrorCode::NotConsecutive: return "NotConsecutive";
    case ErrorCode::NotContainmentOrdered: return "NotContainmentOrdered";
    case ErrorCode::NotAnAlgebra: return "NotAnAlgebra";
    case ErrorCode::NotAProbability: return "NotAProbability";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::InvalidInput, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    Integer d(std::string(den), 10);
    if (d == 0) bad_number(text);
    q = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_number(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    q = Rational(Integer(digits.empty() ? "0" : digits, 10), den);
  } else {
    if (!all_digits(body)) bad_number(text);
    q = Rational(Integer(std::string(body), 10));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "inner product of vectors with different lengths");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ordchoquet
