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

#ifndef WEYLGPD_INVARIANTS_HPP
#define WEYLGPD_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "weylgpd/polynomial.hpp"
#include "weylgpd/rootdata.hpp"

namespace wgd {

enum class Space { Additive, Multiplicative };

std::string space_name(Space s);

/// A root system together with the space it acts on and the function ring:
/// S(h) in coordinates X1..Xm, Y1..Yn for the additive space, the Laurent
/// ring in x1..xm, y1..yn for the torus.
struct Setting {
  RootSystemPtr rs;
  Space space = Space::Additive;
  RingPtr ring;
  bool experimental = false;  // p-type additive machinery

  const SuperType& type() const { return rs->type; }
  bool additive() const { return space == Space::Additive; }
  std::string to_string() const;
};

struct SettingOptions {
  bool allow_experimental = false;  // permit (p, additive)
  bool allow_trivial = false;       // permit rank-zero reduction targets
};

/// Throws DomainError for (p(n), additive) unless allow_experimental is set.
Setting make_setting(const SuperType& type, Space space, const SettingOptions& opts = {});

/// Linear form h_alpha (lambda -> (lambda, alpha); bar-pairing for p/q).
Polynomial incidence_form(const Setting& setting, const Root& alpha);
/// Character e^w as a Laurent monomial (integral weights only).
Polynomial character_monomial(const Setting& setting, const Root& w);
/// e^alpha - 1 (bar-pairing variant for p/q), the defining equation of the
/// subtorus T_alpha.
Polynomial subtorus_equation(const Setting& setting, const Root& alpha);

bool is_w_invariant(const Polynomial& f, const Setting& setting);

struct MembershipReport {
  bool member = false;
  std::string witness;  // failing condition when member is false
};

/// Membership oracle for the invariant algebra: W-invariance plus the
/// per-type translation/derivation condition, checked on one representative
/// per W-orbit of Omega (every element when strict).
MembershipReport is_supersymmetric_report(const Polynomial& f, const Setting& setting,
                                          bool strict = false);
bool is_supersymmetric(const Polynomial& f, const Setting& setting, bool strict = false);

/// The distinguished element T with ker(ev) = T * B. Construction verifies
/// W-invariance, membership, and ev(T) = 0.
struct TElement {
  Polynomial poly;
  Setting setting;
};

TElement t_element(const Setting& setting);

/// Rank-lowering evaluation map: the image of f in the reduced setting.
struct EvResult {
  Polynomial image;
  Setting target;
};

EvResult ev_map(const Polynomial& f, const Setting& setting);

/// Verified low-degree members of the invariant algebra. Every entry passes
/// the membership oracle; no completeness claim.
struct Candidate {
  std::string label;
  Polynomial poly;
};

std::vector<Candidate> generator_candidates(const Setting& setting, int max_degree);

/// One representative per W-orbit (up to sign) of Omega.
std::vector<Root> omega_orbit_representatives(const Setting& setting);

}  // namespace wgd

#endif  // WEYLGPD_INVARIANTS_HPP
