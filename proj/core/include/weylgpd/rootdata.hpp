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

#ifndef WEYLGPD_ROOTDATA_HPP
#define WEYLGPD_ROOTDATA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylgpd/group_action.hpp"
#include "weylgpd/rational.hpp"

namespace wgd {

enum class Family { gl, sl, osp, p, q };

std::string family_name(Family f);

/// One of the supported classical families with its rank parameters.
/// osp uses r (the odd dimension, 2m or 2m+1) and n; p and q use n only.
struct SuperType {
  Family family = Family::gl;
  int m = 0;
  int n = 0;
  int r = 0;  // osp only

  static SuperType make_gl(int m, int n) { return {Family::gl, m, n, 0}; }
  static SuperType make_sl(int m, int n) { return {Family::sl, m, n, 0}; }
  static SuperType make_osp(int r, int n) { return {Family::osp, r / 2, n, r}; }
  static SuperType make_p(int n) { return {Family::p, 0, n, 0}; }
  static SuperType make_q(int n) { return {Family::q, 0, n, 0}; }

  bool strange() const { return family == Family::p || family == Family::q; }
  bool osp_odd() const { return family == Family::osp && r % 2 == 1; }
  /// sl is carried in gl coordinates; the character lattice is the root
  /// lattice rather than the full eps/delta lattice.
  bool lattice_restricted() const { return family == Family::sl; }
  int num_eps() const { return strange() ? n : m; }
  int num_delta() const { return strange() ? 0 : n; }
  int dim() const { return num_eps() + num_delta(); }

  void validate() const;  // throws DomainError on bad parameters
  std::string to_string() const;

  bool operator==(const SuperType& o) const = default;
};

/// A root or weight: rational coordinates in the eps/delta basis
/// (eps_1..eps_m then delta_1..delta_n; p/q types carry eps only).
using Root = std::vector<Rational>;

std::string root_to_string(const SuperType& type, const Root& a);

/// An iso-set: linearly independent, mutually orthogonal isotropic roots
/// (bar-orthogonal positive even roots in types p/q).
using IsoSet = std::vector<Root>;

/// Complete root data for one supported type. Immutable after construction.
struct RootSystem {
  SuperType type;
  std::vector<Rational> gram_diag;  // diagonal bilinear form

  std::vector<Root> even_roots;
  std::vector<Root> odd_roots;
  /// The convention set: isotropic odd roots for KM types, positive even
  /// roots for p/q.
  std::vector<Root> isotropic;
  std::vector<Root> positive_even;
  /// Distinguished set Omega: the positive half of the isotropic roots for
  /// KM types (one representative per +- pair), positive even roots for p/q.
  std::vector<Root> omega;

  std::vector<SignedPerm> weyl_generators;
  std::vector<SignedPerm> weyl_elements;  // the full group, canonically sorted

  IsoSet standard_chain;  // maximal chain of mutually orthogonal omega roots
  int defect = 0;         // maximal iso-set size

  int dim() const { return type.dim(); }
  bool km() const { return !type.strange(); }
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(const SuperType& type);

/// Builder that also accepts rank-zero targets (gl(0|0), q(0), ...), which
/// arise as reduction targets but are rejected as user input.
RootSystemPtr build_root_system_allow_trivial(const SuperType& type);

/// Table row target of the rank-lowering reduction. Throws DomainError when
/// the rank is too small to reduce.
SuperType ds_target_type(const SuperType& type);

Rational bilinear(const Root& a, const Root& b, const RootSystem& rs);

/// eps_i + eps_j for alpha = eps_i - eps_j (types p/q only).
Root bar(const Root& alpha);

/// The pairing that defines hyperplane incidence: (lambda, alpha) for KM,
/// (lambda, bar alpha) for p/q.
Rational incidence_pairing(const RootSystem& rs, const Root& lambda, const Root& alpha);

bool is_root(const RootSystem& rs, const Root& a);
bool is_isotropic_root(const RootSystem& rs, const Root& a);

/// Result of passing to the centralizer root data along an isotropic root
/// (KM) or an (i,j) pair datum (p/q).
struct DsReduction {
  std::vector<Root> delta_beta;     // roots orthogonal to beta, minus +-beta
  std::vector<int> surviving;       // surviving basis label indices, ascending
  SuperType reduced_type;           // table row target
  RootSystemPtr reduced;            // freshly built target system
  bool structural_match = false;    // relabeled delta_beta equals the target root set
};

DsReduction ds_reduction(const RootSystem& rs, const Root& beta);
DsReduction ds_reduction_pair(const RootSystem& rs, int i, int j);  // p/q datum eps_i + eps_j

/// Gram determinant of the bilinear form on a basis of span(delta_beta);
/// the empty span reports determinant 1.
struct SpanFormReport {
  Rational det;
  bool nondegenerate;
  int span_dim;
};
SpanFormReport check_span_nondegenerate(const RootSystem& rs, const Root& beta);
SpanFormReport check_span_nondegenerate_pair(const RootSystem& rs, int i, int j);

/// One-parameter subgroup c_beta, stored as its exponent vector:
/// c_beta(t) has coordinate t^(exponents[v]) at basis label v, and satisfies
/// e^alpha(c_beta(t)) = t^((alpha,beta)) for all roots alpha (bar-pairing in
/// types p/q).
struct OneParamSubgroup {
  std::vector<long> exponents;
  std::vector<Rational> at(const Rational& t) const;
};

OneParamSubgroup c_beta(const RootSystem& rs, const Root& beta);

/// All iso-sets inside Omega of size 1..size_cap, deterministically ordered.
std::vector<IsoSet> enumerate_isosets(const RootSystem& rs, int size_cap);

/// Whether the roots form an iso-set (pairwise condition + independence).
bool is_isoset(const RootSystem& rs, const IsoSet& set);

}  // namespace wgd

#endif  // WEYLGPD_ROOTDATA_HPP
