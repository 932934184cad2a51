// Copyright 2026 The cssp-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
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

namespace cssp {

// Exact rational scalar. gmpxx keeps every arithmetic result in lowest
// terms with a positive denominator.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws ValidationError if den == 0.
Rational make_rational(long num, long den = 1);

// "p/q", or "p" when q == 1; leading '-' for negatives.
std::string to_string(const Rational& q);

// Inverse of to_string. Accepts non-canonical input ("2/4") and
// canonicalizes; rejects anything that is not [-]digits[/digits].
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace cssp
