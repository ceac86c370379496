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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ordchoquet {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q", integers and plain decimals ("-0.125") exactly.
/// Decimals become p / 10^k. Throws Error(InvalidInput) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Decimal approximation with 12 significant digits, for display only.
std::string to_decimal(const Rational& q);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace ordchoquet
