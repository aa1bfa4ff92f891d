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

#ifndef WEYLGPD_MONOMIAL_HPP
#define WEYLGPD_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wgd {

/// Sparse exponent vector. Entries are (variable index, exponent), sorted by
/// variable, never storing zero exponents. Exponents may be negative in
/// Laurent rings.
class Monomial {
 public:
  using Entry = std::pair<int32_t, int32_t>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial variable(int v, int e = 1);
  /// From an arbitrary (possibly unsorted, zero-containing) entry list.
  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  int exponent(int v) const;
  int64_t total_degree() const;
  bool is_affine() const;  // all exponents >= 0
  int max_var() const { return entries_.empty() ? -1 : entries_.back().first; }

  Monomial times(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  /// this / other when the result stays affine; nullopt otherwise.
  std::optional<Monomial> divided_by_affine(const Monomial& other) const;
  /// Unrestricted quotient (Laurent semantics).
  Monomial divided_by(const Monomial& other) const { return times(other.inverse()); }
  bool divides(const Monomial& m) const;  // affine divisibility: this | m
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool disjoint_support(const Monomial& other) const;

  /// Canonical total order: graded, then lexicographic on the dense exponent
  /// vector (earlier variable with larger exponent wins). Returns <0, 0, >0.
  static int cmp(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return entries_ == other.entries_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<Entry> entries_;
};

/// Canonical descending order (leading term first in polynomial maps).
struct MonomialDescLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

}  // namespace wgd

#endif  // WEYLGPD_MONOMIAL_HPP
