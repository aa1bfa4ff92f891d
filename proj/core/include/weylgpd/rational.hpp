// Copyright 2026 The weylgpd authors
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

#ifndef WEYLGPD_RATIONAL_HPP
#define WEYLGPD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wgd {

// Exact rationals. mpq_class keeps values canonical: lowest terms,
// positive denominator, 0 = 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "int" or "int/posint". Throws ParseError on anything else.
Rational rational_from_string(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

bool rational_is_integer(const Rational& r);

/// Exact conversion to long; throws DomainError when out of range or
/// non-integral.
long rational_to_long(const Rational& r);

}  // namespace wgd

#endif  // WEYLGPD_RATIONAL_HPP
