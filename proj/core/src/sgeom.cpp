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

#include "weylgpd/sgeom.hpp"

#include <algorithm>
#include <map>

#include "weylgpd/errors.hpp"

namespace wgd {

namespace {

void require_km(const Setting& setting, const char* where) {
  if (setting.type().strange())
    throw DomainError(std::string(where) + ": types p and q are not supported here");
}

Polynomial chain_equation(const Setting& setting, const Root& beta) {
  return setting.additive() ? incidence_form(setting, beta) : subtorus_equation(setting, beta);
}

IdealPresentation with_extra(const IdealPresentation& base, std::vector<Polynomial> extra) {
  std::vector<Polynomial> gens = base.generators();
  for (Polynomial& g : extra) gens.push_back(std::move(g));
  return IdealPresentation(base.ring(), std::move(gens));
}

bool locus_empty(const Setting& setting, const IdealPresentation& ideal,
                 const GroebnerBudget& budget) {
  if (setting.additive()) return is_unit_ideal(ideal, budget);
  LaurentChart chart = laurent_to_affine(ideal);
  return is_unit_ideal(chart.affine, budget);
}

IdealPresentation intersect_pair(const Setting& setting, const IdealPresentation& a,
                                 const IdealPresentation& b, const GroebnerBudget& budget) {
  return setting.additive() ? ideal_intersect(a, b, budget)
                            : laurent_ideal_intersect(a, b, budget);
}

IdealPresentation apply_weyl(const IdealPresentation& ideal, const SignedPerm& w) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(w.apply(g));
  return IdealPresentation(ideal.ring(), std::move(gens));
}

/// Deduplicates by reduced-basis key and intersects in that deterministic
/// order.
IdealPresentation intersect_weyl_images(const Setting& setting, const IdealPresentation& ideal,
                                        const GroebnerBudget& budget) {
  std::map<std::string, IdealPresentation> distinct;
  for (const SignedPerm& w : setting.rs->weyl_elements) {
    IdealPresentation image = apply_weyl(ideal, w);
    distinct.emplace(canonical_ideal_key(image, budget), image);
  }
  std::optional<IdealPresentation> acc;
  for (auto& [key, image] : distinct)
    acc = acc ? intersect_pair(setting, *acc, image, budget) : image;
  return *acc;
}

}  // namespace

bool vanishing_on(const Setting& setting, const Polynomial& f, const IdealPresentation& ideal,
                  const GroebnerBudget& budget) {
  return setting.additive() ? radical_membership(f, ideal, budget)
                            : laurent_radical_membership(f, ideal, budget);
}

bool same_zero_set(const Setting& setting, const IdealPresentation& a, const IdealPresentation& b,
                   const GroebnerBudget& budget) {
  for (const Polynomial& g : a.generators())
    if (!vanishing_on(setting, g, b, budget)) return false;
  for (const Polynomial& g : b.generators())
    if (!vanishing_on(setting, g, a, budget)) return false;
  return true;
}

ClosedSet make_closed_set(const Setting& setting, IdealPresentation ideal,
                          const GroebnerBudget& budget) {
  require_same_ring(ideal.ring(), setting.ring, "make_closed_set");
  for (const Polynomial& g : ideal.generators())
    for (const SignedPerm& w : setting.rs->weyl_generators)
      if (!vanishing_on(setting, w.apply(g), ideal, budget))
        throw DomainError("ideal is not W-invariant: the Weyl image of a generator leaves the radical");
  return {std::move(ideal), true};
}

std::vector<int> dropped_coordinates(const Setting& setting, int q) {
  require_km(setting, "dropped_coordinates");
  int m = setting.type().num_eps(), n = setting.type().num_delta();
  if (q < 0 || q > std::min(m, n)) throw DomainError("chain prefix length out of range");
  std::vector<int> out;
  for (int i = 1; i <= q; ++i) {
    out.push_back(m - i);
    out.push_back(m + n - i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Substitution projection_substitution(const Setting& setting, const IsoSet& chain_prefix) {
  require_km(setting, "projection_substitution");
  const RootSystem& rs = *setting.rs;
  if (chain_prefix.size() > rs.standard_chain.size())
    throw DomainError("not a prefix of the standard chain");
  for (size_t i = 0; i < chain_prefix.size(); ++i)
    if (chain_prefix[i] != rs.standard_chain[i])
      throw DomainError("not a prefix of the standard chain");
  Substitution s(setting.ring);
  Rational value = setting.additive() ? 0 : 1;
  for (int v : dropped_coordinates(setting, static_cast<int>(chain_prefix.size())))
    s.set_constant(v, value);
  return s;
}

int variety_atypicality(const Setting& setting, const ClosedSet& v, const GroebnerBudget& budget) {
  require_km(setting, "variety_atypicality");
  const RootSystem& rs = *setting.rs;
  int max_q = static_cast<int>(rs.standard_chain.size());
  for (int q = max_q; q >= 1; --q) {
    std::vector<Polynomial> eqs;
    for (int i = 0; i < q; ++i) eqs.push_back(chain_equation(setting, rs.standard_chain[i]));
    if (!locus_empty(setting, with_extra(v.ideal, std::move(eqs)), budget)) return q;
  }
  return 0;
}

IdealPresentation level_ideal(const Setting& setting, const ClosedSet& v, int q, ZConvention z,
                              const GroebnerBudget& budget) {
  require_km(setting, "level_ideal");
  const RootSystem& rs = *setting.rs;
  if (q < 1 || q > static_cast<int>(rs.standard_chain.size()))
    throw DomainError("level index out of range");

  std::vector<Polynomial> eqs;
  for (int i = 0; i < q; ++i) eqs.push_back(chain_equation(setting, rs.standard_chain[i]));
  IdealPresentation cut = with_extra(v.ideal, std::move(eqs));

  std::vector<int> drop = dropped_coordinates(setting, q);
  IdealPresentation projected = setting.additive()
                                    ? elimination_ideal(cut, drop, budget)
                                    : laurent_elimination_ideal(cut, drop, budget);

  std::vector<Polynomial> z_forms;
  int m = setting.type().num_eps();
  for (int i = 1; i <= q; ++i) {
    const Root& beta = rs.standard_chain[i - 1];
    if (z == ZConvention::HBeta) {
      z_forms.push_back(chain_equation(setting, beta));
    } else if (setting.additive()) {
      z_forms.push_back(Polynomial::variable(setting.ring, m - i));  // h_{sigma(beta)}
    } else {
      z_forms.push_back(Polynomial::variable(setting.ring, m - i) -
                        Polynomial::constant(setting.ring, 1));  // e^{sigma(beta)} - 1
    }
  }
  IdealPresentation level = with_extra(projected, std::move(z_forms));
  return intersect_weyl_images(setting, level, budget);
}

SClosureResult s_closure(const Setting& setting, const ClosedSet& v, ZConvention z,
                         const GroebnerBudget& budget) {
  require_km(setting, "s_closure");
  if (!v.w_invariant_verified)
    throw DomainError("s_closure input must be a verified W-invariant closed set");
  SClosureResult result;
  result.atyp_v = variety_atypicality(setting, v, budget);
  result.levels.push_back(v.ideal);
  for (int q = 1; q <= result.atyp_v; ++q)
    result.levels.push_back(level_ideal(setting, v, q, z, budget));
  std::optional<IdealPresentation> acc;
  for (const IdealPresentation& level : result.levels)
    acc = acc ? intersect_pair(setting, *acc, level, budget) : level;
  result.closure = *acc;
  result.symmetrized = symmetrize_generators(setting, result.closure);
  return result;
}

bool is_superalgebraic(const Setting& setting, const ClosedSet& v, ZConvention z,
                       const GroebnerBudget& budget) {
  SClosureResult closure = s_closure(setting, v, z, budget);
  return same_zero_set(setting, v.ideal, closure.closure, budget);
}

IdealPresentation point_orbit_ideal(const Setting& setting, const Point& p,
                                    const GroebnerBudget& budget) {
  validate_point(setting, p);
  std::map<Point, bool> distinct;
  for (const SignedPerm& w : setting.rs->weyl_elements)
    distinct.emplace(setting.additive() ? w.apply_to_weight(p) : w.apply_to_torus(p), true);
  std::optional<IdealPresentation> acc;
  for (const auto& [point, unused] : distinct) {
    std::vector<Polynomial> gens;
    for (size_t v = 0; v < point.size(); ++v)
      gens.push_back(Polynomial::variable(setting.ring, static_cast<int>(v)) -
                     Polynomial::constant(setting.ring, point[v]));
    IdealPresentation maximal(setting.ring, std::move(gens));
    acc = acc ? intersect_pair(setting, *acc, maximal, budget) : maximal;
  }
  return *acc;
}

IdealPresentation orbit_closure_ideal(const Setting& setting, const Point& lambda,
                                      const GroebnerBudget& budget) {
  validate_point(setting, lambda);
  const RootSystem& rs = *setting.rs;
  IsoSet f_set = maximal_isoset_at(setting, lambda).f_set;
  if (f_set.empty()) return point_orbit_ideal(setting, lambda, budget);

  int dim = rs.dim();
  int k = static_cast<int>(f_set.size());
  std::vector<std::string> params;
  for (int i = 0; i < k; ++i) params.push_back("@u" + std::to_string(i + 1));
  RingPtr ext = extend_ring(setting.ring, params);
  std::vector<int> param_vars;
  for (int i = 0; i < k; ++i) param_vars.push_back(dim + i);

  std::map<std::string, IdealPresentation> pieces;
  for (const SignedPerm& w : rs.weyl_elements) {
    std::vector<Polynomial> graph;
    if (setting.additive()) {
      Point base = w.apply_to_weight(lambda);
      std::vector<Root> dirs;
      for (const Root& a : f_set) dirs.push_back(w.apply_to_weight(a));
      for (int v = 0; v < dim; ++v) {
        Polynomial rhs = Polynomial::constant(ext, base[v]);
        for (int i = 0; i < k; ++i)
          if (dirs[i][v] != 0)
            rhs = rhs + Polynomial::variable(ext, param_vars[i]).scaled(dirs[i][v]);
        graph.push_back(Polynomial::variable(ext, v) - rhs);
      }
    } else {
      // Coordinate at w(v): (lambda_v * prod_i u_i^{e_{i,v}})^{sign}.
      std::vector<OneParamSubgroup> cs;
      for (const Root& a : f_set) cs.push_back(c_beta(rs, a));
      for (int v = 0; v < dim; ++v) {
        int target = w.image_of(v);
        int sign = w.sign_of(v);
        std::vector<Monomial::Entry> entries;
        for (int i = 0; i < k; ++i) {
          long e = cs[i].exponents[v] * sign;
          if (e != 0) entries.push_back({param_vars[i], static_cast<int>(e)});
        }
        Rational coef = sign > 0 ? lambda[v] : Rational(1) / lambda[v];
        graph.push_back(Polynomial::variable(ext, target) -
                        Polynomial::term(ext, Monomial::from_entries(std::move(entries)), coef));
      }
    }
    IdealPresentation graph_ideal(ext, std::move(graph));
    IdealPresentation eliminated = setting.additive()
                                       ? elimination_ideal(graph_ideal, param_vars, budget)
                                       : laurent_elimination_ideal(graph_ideal, param_vars, budget);
    std::vector<Polynomial> down;
    for (const Polynomial& g : eliminated.generators())
      down.push_back(rename_into(g, setting.ring));
    IdealPresentation piece(setting.ring, std::move(down));
    pieces.emplace(canonical_ideal_key(piece, budget), piece);
  }
  std::optional<IdealPresentation> acc;
  for (auto& [key, piece] : pieces)
    acc = acc ? intersect_pair(setting, *acc, piece, budget) : piece;
  return *acc;
}

bool tau_stability_holds(const Setting& setting, const IdealPresentation& ideal, const Root& beta,
                         const GroebnerBudget& budget) {
  require_km(setting, "tau_stability_holds");
  RingPtr ext = extend_ring(setting.ring, {"@t"});
  int tvar = ext->arity() - 1;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(rename_into(g, ext));
  gens.push_back(rename_into(chain_equation(setting, beta), ext));
  IdealPresentation constrained(ext, std::move(gens));

  OneParamSubgroup c;
  if (!setting.additive()) c = c_beta(*setting.rs, beta);
  for (const Polynomial& g : ideal.generators()) {
    Substitution s(ext);
    if (setting.additive()) {
      for (int v = 0; v < setting.rs->dim(); ++v)
        if (beta[v] != 0)
          s.set(v, Polynomial::variable(ext, v) +
                       Polynomial::variable(ext, tvar).scaled(beta[v]));
    } else {
      for (int v = 0; v < setting.rs->dim(); ++v) {
        long e = c.exponents[v];
        if (e != 0)
          s.set(v, Polynomial::term(
                       ext, Monomial::variable(v).times(Monomial::variable(tvar, static_cast<int>(e))), 1));
      }
    }
    Polynomial moved = substitute(g, s);
    bool ok = setting.additive() ? radical_membership(moved, constrained, budget)
                                 : laurent_radical_membership(moved, constrained, budget);
    if (!ok) return false;
  }
  return true;
}

std::vector<GeneratorFlag> symmetrize_generators(const Setting& setting,
                                                 const IdealPresentation& ideal) {
  std::vector<GeneratorFlag> out;
  for (const Polynomial& g : ideal.generators()) {
    Polynomial sym = reynolds(g, setting.rs->weyl_elements);
    bool member = is_supersymmetric(sym, setting);
    out.push_back({g, std::move(sym), member});
  }
  return out;
}

}  // namespace wgd
