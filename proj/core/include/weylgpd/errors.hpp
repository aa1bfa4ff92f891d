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

#ifndef WEYLGPD_ERRORS_HPP
#define WEYLGPD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgd {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different rings.
class RingMismatchError : public Error {
 public:
  explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Invalid parameters, unsupported (type, space) combination, precondition
/// violation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A partial groupoid morphism was applied outside its domain.
class NotDefinedAtError : public DomainError {
 public:
  explicit NotDefinedAtError(const std::string& what) : DomainError(what) {}
};

/// A Groebner computation exceeded its configured pair/degree budget.
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

}  // namespace wgd

#endif  // WEYLGPD_ERRORS_HPP
