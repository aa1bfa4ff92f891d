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

#ifndef WEYLGPD_SGEOM_HPP
#define WEYLGPD_SGEOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "weylgpd/groebner.hpp"
#include "weylgpd/groupoid.hpp"

namespace wgd {

/// Which linear form cuts the translation directions out of a level set.
/// The working default vanishes on U_beta + k*beta; the sigma variant keeps
/// the draft's original choice for comparison.
enum class ZConvention { HBeta, HSigmaBeta };

/// A W-invariant closed set, presented by an ideal of O(X). Radicality is
/// not enforced; all set-level comparisons go through radical membership.
struct ClosedSet {
  IdealPresentation ideal;
  bool w_invariant_verified = false;
};

/// Verifies W-invariance (each generator's Weyl images lie in the radical)
/// and wraps the presentation. Throws DomainError when verification fails.
ClosedSet make_closed_set(const Setting& setting, IdealPresentation ideal,
                          const GroebnerBudget& budget = {});

/// Membership in the ideal's radical, dispatching on the ring mode.
bool vanishing_on(const Setting& setting, const Polynomial& f, const IdealPresentation& ideal,
                  const GroebnerBudget& budget = {});

/// V(I) == V(J) via two-sided radical membership of generators.
bool same_zero_set(const Setting& setting, const IdealPresentation& a, const IdealPresentation& b,
                   const GroebnerBudget& budget = {});

/// Comorphism of the projection along a prefix of the standard chain: the
/// dropped coordinate pairs map to 0 (additive) or 1 (multiplicative).
Substitution projection_substitution(const Setting& setting, const IsoSet& chain_prefix);

/// Coordinate indices (eps_{m-i+1}, delta_{n-i+1} for i <= q) killed by the
/// projection along the standard chain prefix of length q.
std::vector<int> dropped_coordinates(const Setting& setting, int q);

/// atyp V: the largest q such that V meets the intersection of the first q
/// standard-chain hyperplanes (unit-ideal test; sound over the closure).
int variety_atypicality(const Setting& setting, const ClosedSet& v,
                        const GroebnerBudget& budget = {});

/// The level ideal I_q: eliminate the first q coordinate pairs from
/// I + (chain equations), extend by the z-forms, intersect over the distinct
/// Weyl images.
IdealPresentation level_ideal(const Setting& setting, const ClosedSet& v, int q,
                              ZConvention z = ZConvention::HBeta,
                              const GroebnerBudget& budget = {});

struct GeneratorFlag {
  Polynomial generator;
  Polynomial symmetrized;     // Reynolds average
  bool supersymmetric = false;  // oracle verdict on the symmetrized form
};

struct SClosureResult {
  std::vector<IdealPresentation> levels;  // I_0 .. I_r
  IdealPresentation closure;              // intersection of the levels
  int atyp_v = 0;
  std::vector<GeneratorFlag> symmetrized;  // closure generators, flagged
};

/// The smallest groupoid-stable closed set containing V, level by level.
/// KM settings only; the input must be W-invariant.
SClosureResult s_closure(const Setting& setting, const ClosedSet& v,
                         ZConvention z = ZConvention::HBeta, const GroebnerBudget& budget = {});

/// Whether V already equals its closure.
bool is_superalgebraic(const Setting& setting, const ClosedSet& v,
                       ZConvention z = ZConvention::HBeta, const GroebnerBudget& budget = {});

/// Vanishing ideal of the orbit through lambda: implicitization of the
/// parametrized family for each Weyl image, intersected.
IdealPresentation orbit_closure_ideal(const Setting& setting, const Point& lambda,
                                      const GroebnerBudget& budget = {});

/// Symbolic tau-stability: every generator f of I satisfies
/// f(translated point) in radical(I + hyperplane equation) over O(X)[t].
bool tau_stability_holds(const Setting& setting, const IdealPresentation& ideal, const Root& beta,
                         const GroebnerBudget& budget = {});

/// Vanishing ideal of the (finite) W-orbit of a point.
IdealPresentation point_orbit_ideal(const Setting& setting, const Point& p,
                                    const GroebnerBudget& budget = {});

/// Reynolds-symmetrized generators with oracle flags (closure reporting).
std::vector<GeneratorFlag> symmetrize_generators(const Setting& setting,
                                                 const IdealPresentation& ideal);

}  // namespace wgd

#endif  // WEYLGPD_SGEOM_HPP
