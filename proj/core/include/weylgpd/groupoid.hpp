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

#ifndef WEYLGPD_GROUPOID_HPP
#define WEYLGPD_GROUPOID_HPP

#include <optional>
#include <vector>

#include "weylgpd/invariants.hpp"

namespace wgd {

/// A point of the acted-on space: a weight of h* (additive) or a torus point
/// (multiplicative, all coordinates nonzero).
using Point = std::vector<Rational>;

void validate_point(const Setting& setting, const Point& p);

/// Whether the partial translation along alpha is defined at p: p in the
/// hyperplane Pi_alpha (additive) or the subtorus T_alpha (multiplicative).
bool in_tau_domain(const Setting& setting, const Point& p, const Root& alpha);

/// Morphisms of the continuous Weyl groupoid: Weyl elements act everywhere,
/// tau_{alpha,t} only on Pi_alpha / T_alpha.
struct GroupoidGenerator {
  enum class Kind { Weyl, Tau };
  Kind kind = Kind::Weyl;
  SignedPerm w;  // Weyl
  Root alpha;    // Tau
  Rational t;    // Tau (nonzero in the multiplicative setting)
};

/// Applies a generator; throws NotDefinedAtError outside the tau domain.
Point apply_generator(const Setting& setting, const GroupoidGenerator& g, const Point& p);

/// Degree of atypicality: maximal size of an iso-set vanishing on p.
int atyp(const Setting& setting, const Point& p);

/// E(p): all convention-set roots incident to p; F(p): a maximum iso-subset
/// (deterministic choice); |F(p)| = atyp(p).
struct IncidenceData {
  std::vector<Root> e_set;
  IsoSet f_set;
};
IncidenceData maximal_isoset_at(const Setting& setting, const Point& p);

/// Finite certificate of the orbit through `base`: the orbit is the union
/// over W of the |F|-parameter family along F.
struct OrbitDescription {
  Point base;
  std::vector<Root> e_set;
  IsoSet f_set;
  int dim = 0;
};
OrbitDescription orbit_description(const Setting& setting, const Point& p);

/// Replayable certificate: mu = w( tau_{alpha_k, t_k} ... tau_{alpha_1, t_1} lambda ).
struct OrbitWitness {
  SignedPerm w;
  std::vector<std::pair<Root, Rational>> taus;
};

/// Searches W and the translation parameters; any witness returned has been
/// replayed through apply_generator before being trusted.
std::optional<OrbitWitness> orbit_contains(const Setting& setting, const Point& lambda,
                                           const Point& mu);

bool equivalent(const Setting& setting, const Point& lambda, const Point& mu);

/// Replays a witness from lambda; returns the endpoint.
Point replay_witness(const Setting& setting, const Point& lambda, const OrbitWitness& witness);

}  // namespace wgd

#endif  // WEYLGPD_GROUPOID_HPP
