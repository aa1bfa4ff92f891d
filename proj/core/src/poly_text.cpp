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

#include "weylgpd/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "weylgpd/errors.hpp"

namespace wgd {

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed_coef = false;
    if (m.is_one() || a != 1) {
      os << rational_to_string(a);
      printed_coef = true;
    }
    bool first_var = !printed_coef;
    for (const auto& [v, e] : m.entries()) {
      if (!first_var) os << "*";
      first_var = false;
      os << f.ring()->name(v);
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

class Scanner {
 public:
  Scanner(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  // Unsigned integer digits.
  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  // rational := digits ["/" digits]
  Rational rational() {
    std::string n = digits();
    if (accept('/')) {
      std::string d = digits();
      return rational_from_string(n + "/" + d);
    }
    return rational_from_string(n);
  }

  // Signed integer for exponents.
  int integer() {
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    std::string d = digits();
    Rational r = rational_from_string(d);
    return sign * static_cast<int>(rational_to_long(r));
  }

  // Longest variable-name match at the current position, or -1.
  int variable() {
    skip_ws();
    int best = -1;
    size_t best_len = 0;
    for (int v = 0; v < ring_->arity(); ++v) {
      const std::string& name = ring_->name(v);
      if (name.size() > best_len && text_.substr(pos_).starts_with(name)) {
        best = v;
        best_len = name.size();
      }
    }
    if (best >= 0) pos_ += best_len;
    return best;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

 private:
  const RingPtr& ring_;
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Scanner sc(ring, text);
  Polynomial out(ring);
  bool any = false;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else
      sc.accept('+');
    Rational coef = 1;
    bool have_coef = false;
    if (sc.at_digit()) {
      coef = sc.rational();
      have_coef = true;
    }
    std::vector<Monomial::Entry> entries;
    bool pending = have_coef && sc.accept('*');
    while (true) {
      int v = sc.variable();
      if (v < 0) {
        if (pending) sc.fail("expected variable after '*'");
        if (!have_coef && entries.empty()) sc.fail("expected variable or number");
        break;
      }
      int e = 1;
      if (sc.accept('^')) e = sc.integer();
      if (e < 0 && !ring->laurent()) sc.fail("negative exponent in affine ring");
      entries.push_back({v, e});
      pending = sc.accept('*');
    }
    out.add_term(Monomial::from_entries(std::move(entries)), sign * coef);
    any = true;
    char c = sc.peek();
    if (c != '+' && c != '-' && c != '\0') sc.fail(std::string("unexpected character '") + c + "'");
  }
  if (!any) throw ParseError("empty polynomial text");
  return out;
}

}  // namespace wgd
