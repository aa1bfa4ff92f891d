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

#ifndef WEYLGPD_GROUP_ACTION_HPP
#define WEYLGPD_GROUP_ACTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weylgpd/polynomial.hpp"

namespace wgd {

/// Signed permutation of the coordinate basis: basis vector v maps to
/// sign[v] * basis[img[v]]. The same element acts on an affine ring
/// (sign = coordinate negation) and a Laurent ring (sign = coordinate
/// inversion, i.e. the character of the negated weight).
class SignedPerm {
 public:
  SignedPerm() = default;
  SignedPerm(std::vector<int> img, std::vector<int8_t> sign);

  static SignedPerm identity(int n);
  static SignedPerm transposition(int n, int i, int j);
  static SignedPerm flip(int n, int i);  // negates/inverts coordinate i

  int size() const { return static_cast<int>(img_.size()); }
  int image_of(int v) const { return img_[v]; }
  int sign_of(int v) const { return sign_[v]; }
  bool is_identity() const;

  /// Composition acting on points: (a.then(b)) x = b (a x).
  SignedPerm then(const SignedPerm& next) const;
  SignedPerm inverse() const;

  /// Coordinates of w(x) for an additive point x.
  std::vector<Rational> apply_to_weight(const std::vector<Rational>& x) const;
  /// Coordinates of w(x) on the torus (sign -1 inverts the coordinate).
  std::vector<Rational> apply_to_torus(const std::vector<Rational>& x) const;

  /// Pullback action on functions: (w f)(x) = f(w^{-1} x).
  Polynomial apply(const Polynomial& f) const;

  /// Canonical key for ordering and dedup.
  std::string key() const;

  bool operator==(const SignedPerm& other) const {
    return img_ == other.img_ && sign_ == other.sign_;
  }

 private:
  std::vector<int> img_;
  std::vector<int8_t> sign_;
};

/// BFS closure of the generated group, sorted by canonical key.
/// Throws DomainError past `cap` elements.
std::vector<SignedPerm> generate_group(const std::vector<SignedPerm>& generators, int n,
                                       size_t cap = 1u << 20);

/// (1/|W|) sum of w.apply(f). Throws DomainError on an empty list.
Polynomial reynolds(const Polynomial& f, const std::vector<SignedPerm>& group);

}  // namespace wgd

#endif  // WEYLGPD_GROUP_ACTION_HPP
