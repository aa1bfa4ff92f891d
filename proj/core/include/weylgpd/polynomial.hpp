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

#ifndef WEYLGPD_POLYNOMIAL_HPP
#define WEYLGPD_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "weylgpd/monomial.hpp"
#include "weylgpd/rational.hpp"
#include "weylgpd/ring.hpp"

namespace wgd {

/// Sparse multivariate (Laurent) polynomial with exact rational coefficients.
/// Terms are kept in canonical graded-lex descending order; no zero
/// coefficients are stored. Values are immutable in spirit: all operations
/// return new polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialDescLess>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(const RingPtr& ring, int v);
  static Polynomial term(const RingPtr& ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero scalar times a single monomial (a unit of the Laurent ring).
  bool is_unit_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  /// Constant term (0 if absent).
  Rational constant_value() const;

  /// Max total degree over terms; 0 for the zero polynomial.
  int64_t total_degree() const;
  int degree_in(int v) const;      // max exponent of v
  int min_exponent_in(int v) const;  // min exponent of v over terms (0 if v absent from some term)
  bool involves(int v) const;
  bool is_affine() const;  // every monomial affine

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(int k) const;  // k >= 0; throws DomainError on negative k

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Adds c*m in place (internal builder; keeps canonical form).
  void add_term(const Monomial& m, const Rational& c);

  /// Exact evaluation at a point given by one coordinate per variable.
  /// Negative exponents require the corresponding coordinate to be nonzero.
  Rational evaluate(std::span<const Rational> point) const;

  /// Leading coefficient divided out.
  Polynomial monic() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Simultaneous ring homomorphism determined by per-variable images.
/// Variables without an explicit image map to the variable of the same name
/// in the target ring. In Laurent mode a variable occurring with a negative
/// exponent must have a unit image (nonzero scalar times a monomial).
class Substitution {
 public:
  explicit Substitution(RingPtr target) : target_(std::move(target)) {}

  Substitution& set(int source_var, Polynomial image);
  Substitution& set_constant(int source_var, const Rational& c);

  const RingPtr& target() const { return target_; }
  const std::map<int, Polynomial>& images() const { return images_; }

 private:
  RingPtr target_;
  std::map<int, Polynomial> images_;
};

Polynomial substitute(const Polynomial& f, const Substitution& s);

/// Exact division: returns q with f = q*g, or nullopt when g does not divide
/// f. In Laurent rings divisibility is decided after clearing monomial units
/// from both operands. Throws DomainError when g = 0.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// f with every monomial shifted by the inverse of its per-variable minimal
/// exponents, so the result is affine and no variable divides it.
/// Returns the primitive part; unit_out (if nonnull) receives the monomial u
/// with f = u * primitive.
Polynomial monomial_primitive_part(const Polynomial& f, Monomial* unit_out = nullptr);

/// Coefficients of powers of `var`: result[k] = coefficient polynomial of
/// var^(k + offset_out) with var struck out. offset_out is the minimal
/// exponent of var (0 when f is affine in var).
std::vector<Polynomial> coefficients_in(const Polynomial& f, int var, int* offset_out = nullptr);

/// f rebuilt in `target`, variables matched by name. Throws DomainError when
/// a variable that actually occurs has no counterpart.
Polynomial rename_into(const Polynomial& f, const RingPtr& target);

}  // namespace wgd

#endif  // WEYLGPD_POLYNOMIAL_HPP
