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

#ifndef WEYLGPD_MONOMIAL_ORDER_HPP
#define WEYLGPD_MONOMIAL_ORDER_HPP

#include <string>
#include <vector>

#include "weylgpd/monomial.hpp"

namespace wgd {

/// Term orders for Groebner computations. The block-elimination order
/// ranks any monomial containing a front-block variable above any monomial
/// containing none (grevlex inside each block), so the basis elements free
/// of front variables generate the elimination ideal.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, {}); }
  static MonomialOrder block_elimination(std::vector<int> front_vars) {
    return MonomialOrder(Kind::Block, std::move(front_vars));
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& front() const { return front_; }

  /// <0, 0, >0 as a < b, a == b, a > b under this order.
  int cmp(const Monomial& a, const Monomial& b, int arity) const;
  bool less(const Monomial& a, const Monomial& b, int arity) const { return cmp(a, b, arity) < 0; }

  std::string tag() const;
  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && front_ == other.front_;
  }

 private:
  MonomialOrder(Kind k, std::vector<int> front) : kind_(k), front_(std::move(front)) {}
  Kind kind_;
  std::vector<int> front_;
};

}  // namespace wgd

#endif  // WEYLGPD_MONOMIAL_ORDER_HPP
