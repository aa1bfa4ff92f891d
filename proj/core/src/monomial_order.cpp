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

#include "weylgpd/monomial_order.hpp"

#include <algorithm>

namespace wgd {

namespace {

// Dense exponent vector; orders below assume affine monomials.
std::vector<int> dense(const Monomial& m, int arity) {
  std::vector<int> e(arity, 0);
  for (const auto& [v, k] : m.entries()) e[v] = k;
  return e;
}

int lex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int grevlex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  long da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db ? -1 : 1;
  // Reverse lex: last differing variable, smaller exponent wins.
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b, int arity) const {
  std::vector<int> ea = dense(a, arity), eb = dense(b, arity);
  switch (kind_) {
    case Kind::Lex:
      return lex_cmp(ea, eb);
    case Kind::GrevLex:
      return grevlex_cmp(ea, eb);
    case Kind::Block: {
      std::vector<int> fa, fb, ra, rb;
      std::vector<bool> is_front(arity, false);
      for (int v : front_) is_front[v] = true;
      for (int v = 0; v < arity; ++v) {
        (is_front[v] ? fa : ra).push_back(ea[v]);
        (is_front[v] ? fb : rb).push_back(eb[v]);
      }
      if (int c = grevlex_cmp(fa, fb)) return c;
      return grevlex_cmp(ra, rb);
    }
  }
  return 0;
}

std::string MonomialOrder::tag() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Block: {
      std::string t = "block[";
      for (size_t i = 0; i < front_.size(); ++i) {
        if (i) t += ",";
        t += std::to_string(front_[i]);
      }
      return t + "]";
    }
  }
  return "?";
}

}  // namespace wgd
