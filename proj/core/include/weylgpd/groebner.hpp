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

#ifndef WEYLGPD_GROEBNER_HPP
#define WEYLGPD_GROEBNER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "weylgpd/monomial_order.hpp"
#include "weylgpd/polynomial.hpp"

namespace wgd {

/// Pair/degree caps. Exceeding either raises BudgetExceededError instead of
/// returning a partial basis.
struct GroebnerBudget {
  long max_pairs = 200000;
  long max_degree = 120;
};

/// A finitely generated ideal with a single-slot cache for its most recent
/// reduced Groebner basis. Copies share the cache.
class IdealPresentation {
 public:
  IdealPresentation() = default;
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  static IdealPresentation zero(RingPtr ring) { return IdealPresentation(std::move(ring), {}); }

  struct Cache {
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> basis;
  };
  std::shared_ptr<Cache>& cache_slot() const { return cache_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  mutable std::shared_ptr<Cache> cache_;
};

/// Unique reduced Groebner basis (monic, autoreduced, sorted ascending in the
/// order). The ring must be affine. Results are cached on the presentation.
std::vector<Polynomial> reduced_groebner_basis(const IdealPresentation& ideal,
                                               const MonomialOrder& order,
                                               const GroebnerBudget& budget = {});

/// Remainder of f modulo the reduced basis; zero iff f is a member.
Polynomial normal_form(const Polynomial& f, const IdealPresentation& ideal,
                       const MonomialOrder& order, const GroebnerBudget& budget = {});

bool ideal_member(const Polynomial& f, const IdealPresentation& ideal,
                  const GroebnerBudget& budget = {});

/// Whether 1 is in the ideal (empty zero locus over the algebraic closure).
bool is_unit_ideal(const IdealPresentation& ideal, const GroebnerBudget& budget = {});

/// Rabinowitsch trick: f vanishes on V(I) over the algebraic closure iff
/// 1 in I + (z*f - 1) with z a fresh variable.
bool radical_membership(const Polynomial& f, const IdealPresentation& ideal,
                        const GroebnerBudget& budget = {});

/// Generators of I intersected with the subring omitting `drop`, computed via
/// a block-elimination order. Returned in the same ring; no generator
/// involves a dropped variable.
IdealPresentation elimination_ideal(const IdealPresentation& ideal, const std::vector<int>& drop,
                                    const GroebnerBudget& budget = {});

/// I cap J via eliminating t from t*I + (1-t)*J.
IdealPresentation ideal_intersect(const IdealPresentation& a, const IdealPresentation& b,
                                  const GroebnerBudget& budget = {});

/// Affine chart of a Laurent ideal: one inverse variable per original
/// variable, relations x*inv(x) - 1, generators cleared of negative
/// exponents. Membership and elimination answers agree with the torus
/// geometry.
struct LaurentChart {
  IdealPresentation affine;     // in the doubled ring
  RingPtr laurent_ring;         // the original ring
  std::vector<int> inverse_of;  // affine index of inv(x_v) for each original v
};

LaurentChart laurent_to_affine(const IdealPresentation& laurent_ideal);

/// Doubled affine ring (and inverse index map) for a Laurent ring.
RingPtr laurent_chart_ring(const RingPtr& laurent_ring, std::vector<int>* inverse_of = nullptr);

/// A Laurent polynomial rewritten in the chart ring: negative exponents are
/// cleared through the inverse variables.
Polynomial to_chart(const Polynomial& laurent_poly, const RingPtr& chart_ring);

/// Back from the chart: inverse variables map to negative exponents.
Polynomial from_chart(const Polynomial& chart_poly, const RingPtr& laurent_ring,
                      const std::vector<int>& inverse_of);

/// Membership / radical membership for Laurent ideals through the chart.
bool laurent_ideal_member(const Polynomial& f, const IdealPresentation& laurent_ideal,
                          const GroebnerBudget& budget = {});
bool laurent_radical_membership(const Polynomial& f, const IdealPresentation& laurent_ideal,
                                const GroebnerBudget& budget = {});

/// Laurent elimination ideal: intersection with the Laurent subring omitting
/// the dropped variables (their inverses are dropped alongside).
IdealPresentation laurent_elimination_ideal(const IdealPresentation& laurent_ideal,
                                            const std::vector<int>& drop,
                                            const GroebnerBudget& budget = {});

/// Intersection of Laurent ideals through their common affine chart.
IdealPresentation laurent_ideal_intersect(const IdealPresentation& a, const IdealPresentation& b,
                                          const GroebnerBudget& budget = {});

/// Canonical string of the reduced grevlex basis; equal iff the ideals have
/// equal reduced bases. Used for deterministic dedup.
std::string canonical_ideal_key(const IdealPresentation& ideal, const GroebnerBudget& budget = {});

}  // namespace wgd

#endif  // WEYLGPD_GROEBNER_HPP
