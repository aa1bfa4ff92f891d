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

#ifndef WEYLGPD_POLY_TEXT_HPP
#define WEYLGPD_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "weylgpd/polynomial.hpp"

namespace wgd {

// Text grammar
//   poly     := [sign] term (sign term)*
//   term     := rational ["*" factors] | factors
//   factors  := var ["^" int] (["*"] var ["^" int])*
//   rational := int ["/" posint]
// Variable names come from the ring context; whitespace is insignificant.
// format() emits canonical form (graded-lex descending, reduced
// coefficients) and parse(format(f)) == f bit-exactly.

std::string format_polynomial(const Polynomial& f);
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace wgd

#endif  // WEYLGPD_POLY_TEXT_HPP
