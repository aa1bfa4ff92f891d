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

#include "weylgpd/invariants.hpp"

#include <algorithm>
#include <set>

#include "weylgpd/errors.hpp"
#include "weylgpd/group_action.hpp"
#include "weylgpd/poly_text.hpp"

namespace wgd {

std::string space_name(Space s) { return s == Space::Additive ? "additive" : "multiplicative"; }

std::string Setting::to_string() const {
  return rs->type.to_string() + " " + space_name(space);
}

Setting make_setting(const SuperType& type, Space space, const SettingOptions& opts) {
  if (type.family == Family::p && space == Space::Additive && !opts.allow_experimental)
    throw DomainError("(p(n), additive) is not supported: the additive center is degenerate");
  RootSystemPtr rs =
      opts.allow_trivial ? build_root_system_allow_trivial(type) : build_root_system(type);
  std::vector<std::string> names;
  bool add = space == Space::Additive;
  for (int i = 1; i <= type.num_eps(); ++i)
    names.push_back((add ? "X" : "x") + std::to_string(i));
  for (int j = 1; j <= type.num_delta(); ++j)
    names.push_back((add ? "Y" : "y") + std::to_string(j));
  Setting s;
  s.rs = rs;
  s.space = space;
  s.ring = make_ring(std::move(names), add ? RingMode::Affine : RingMode::Laurent);
  s.experimental = type.family == Family::p && space == Space::Additive;
  return s;
}

Polynomial incidence_form(const Setting& setting, const Root& alpha) {
  if (!setting.additive()) throw DomainError("incidence_form lives on the additive space");
  const RootSystem& rs = *setting.rs;
  Root a = rs.km() ? alpha : bar(alpha);
  Polynomial h(setting.ring);
  for (int v = 0; v < rs.dim(); ++v)
    if (a[v] != 0) h.add_term(Monomial::variable(v), rs.gram_diag[v] * a[v]);
  return h;
}

Polynomial character_monomial(const Setting& setting, const Root& w) {
  if (setting.additive()) throw DomainError("characters live on the torus");
  std::vector<Monomial::Entry> entries;
  for (size_t v = 0; v < w.size(); ++v) {
    if (w[v] == 0) continue;
    entries.push_back({static_cast<int>(v), static_cast<int>(rational_to_long(w[v]))});
  }
  return Polynomial::term(setting.ring, Monomial::from_entries(std::move(entries)), 1);
}

Polynomial subtorus_equation(const Setting& setting, const Root& alpha) {
  const RootSystem& rs = *setting.rs;
  Root a = rs.km() ? alpha : bar(alpha);
  return character_monomial(setting, a) - Polynomial::constant(setting.ring, 1);
}

bool is_w_invariant(const Polynomial& f, const Setting& setting) {
  require_same_ring(f.ring(), setting.ring, "is_w_invariant");
  for (const SignedPerm& w : setting.rs->weyl_generators)
    if (w.apply(f) != f) return false;
  return true;
}

std::vector<Root> omega_orbit_representatives(const Setting& setting) {
  const RootSystem& rs = *setting.rs;
  std::vector<Root> reps;
  std::set<Root> covered;
  for (const Root& a : rs.omega) {
    if (covered.count(a)) continue;
    reps.push_back(a);
    // Saturate the orbit of +-a under the full Weyl group.
    std::vector<Root> frontier = {a};
    covered.insert(a);
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const Root& b : frontier)
        for (const SignedPerm& w : rs.weyl_generators)
          for (const Root& c : {w.apply_to_weight(b), [&] {
                 Root nb = b;
                 for (Rational& x : nb) x = -x;
                 return w.apply_to_weight(nb);
               }()}) {
            if (covered.insert(c).second) next.push_back(c);
          }
      frontier = std::move(next);
    }
  }
  return reps;
}

namespace {

// f(X + t*alpha) in the ring extended by t (additive KM condition carrier).
Polynomial translate_by_root(const Polynomial& f, const Setting& setting, const Root& alpha,
                             const RingPtr& ext, int tvar) {
  Substitution s(ext);
  Polynomial t = Polynomial::variable(ext, tvar);
  for (int v = 0; v < setting.rs->dim(); ++v) {
    if (alpha[v] == 0) continue;
    s.set(v, Polynomial::variable(ext, v) + t.scaled(alpha[v]));
  }
  return substitute(f, s);
}

// D_alpha f with D_alpha(e^w) = (alpha, w) e^w.
Polynomial derivation(const Polynomial& f, const Setting& setting, const Root& alpha) {
  const RootSystem& rs = *setting.rs;
  Polynomial out(setting.ring);
  for (const auto& [m, c] : f.terms()) {
    Root w(rs.dim(), Rational(0));
    for (const auto& [v, e] : m.entries()) w[v] = e;
    Rational factor = bilinear(alpha, w, rs);
    if (factor != 0) out.add_term(m, c * factor);
  }
  return out;
}

// Substitutes the last two eps coordinates by (-t, t) [q types] or
// (1/t, t) [p types] and reports whether t survives.
bool strange_condition_holds(const Polynomial& f, const Setting& setting, int i, int j,
                             std::string* witness) {
  RingPtr ext = extend_ring(setting.ring, {"@t"});
  int tvar = ext->arity() - 1;
  Polynomial t = Polynomial::variable(ext, tvar);
  Substitution s(ext);
  if (setting.type().family == Family::q) {
    s.set(i, -t);
    s.set(j, t);
  } else {
    // p multiplicative: x_i = t^{-1}, x_j = t
    s.set(i, Polynomial::term(ext, Monomial::variable(tvar, -1), 1));
    s.set(j, t);
  }
  Polynomial g = substitute(f, s);
  if (g.involves(tvar)) {
    if (witness)
      *witness = "restriction to coordinates (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ") depends on the line parameter";
    return false;
  }
  return true;
}

}  // namespace

MembershipReport is_supersymmetric_report(const Polynomial& f, const Setting& setting,
                                          bool strict) {
  require_same_ring(f.ring(), setting.ring, "is_supersymmetric");
  const RootSystem& rs = *setting.rs;
  if (setting.type().family == Family::p && setting.additive())
    throw DomainError("(p(n), additive) has no membership oracle");

  if (!is_w_invariant(f, setting)) return {false, "not W-invariant"};

  if (rs.type.strange()) {
    int n = rs.type.n;
    if (n < 2) return {true, ""};
    std::string witness;
    if (strict) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!strange_condition_holds(f, setting, i, j, &witness)) return {false, witness};
    } else {
      if (!strange_condition_holds(f, setting, n - 2, n - 1, &witness)) return {false, witness};
    }
    return {true, ""};
  }

  std::vector<Root> reps = strict ? rs.omega : omega_orbit_representatives(setting);
  if (setting.additive()) {
    RingPtr ext = extend_ring(setting.ring, {"@t"});
    int tvar = ext->arity() - 1;
    for (const Root& alpha : reps) {
      Polynomial h = incidence_form(setting, alpha);
      Polynomial hx = substitute(h, Substitution(ext));  // h in the extended ring
      Polynomial diff = translate_by_root(f, setting, alpha, ext, tvar) - substitute(f, Substitution(ext));
      for (const Polynomial& coeff : coefficients_in(diff, tvar)) {
        if (coeff.is_zero()) continue;
        if (!divide_exact(coeff, hx)) {
          return {false, "translation along " + root_to_string(rs.type, alpha) +
                             " is not constant on the hyperplane of " +
                             format_polynomial(h)};
        }
      }
    }
  } else {
    for (const Root& alpha : reps) {
      Polynomial d = derivation(f, setting, alpha);
      Polynomial eq = character_monomial(setting, alpha) - Polynomial::constant(setting.ring, 1);
      if (!divide_exact(d, eq)) {
        return {false, "derivation along " + root_to_string(rs.type, alpha) +
                           " is not divisible by e^alpha - 1"};
      }
    }
  }
  return {true, ""};
}

bool is_supersymmetric(const Polynomial& f, const Setting& setting, bool strict) {
  return is_supersymmetric_report(f, setting, strict).member;
}

TElement t_element(const Setting& setting) {
  const RootSystem& rs = *setting.rs;
  const SuperType& t = rs.type;
  Polynomial T = Polynomial::constant(setting.ring, 1);
  if (t.family == Family::p) {
    if (setting.additive()) throw DomainError("no T element for (p(n), additive)");
    for (int i = 0; i < t.n; ++i)
      for (int j = i + 1; j < t.n; ++j) {
        Polynomial xij =
            Polynomial::term(setting.ring, Monomial::from_entries({{i, 1}, {j, 1}}), 1);
        T = T * (Polynomial::constant(setting.ring, 1) - xij);
      }
  } else if (t.family == Family::q) {
    for (int i = 0; i < t.n; ++i)
      for (int j = i + 1; j < t.n; ++j)
        T = T * (Polynomial::variable(setting.ring, i) + Polynomial::variable(setting.ring, j));
  } else if (setting.additive()) {
    for (const Root& beta : rs.omega) T = T * incidence_form(setting, beta);
  } else {
    Root rho_iso(rs.dim(), Rational(0));
    for (const Root& beta : rs.omega)
      for (int v = 0; v < rs.dim(); ++v) rho_iso[v] += beta[v];
    for (Rational& c : rho_iso) {
      c /= 2;
      if (!rational_is_integer(c))
        throw DomainError("T element of " + setting.to_string() +
                          " needs the half-sum of Omega to be integral");
    }
    T = character_monomial(setting, rho_iso);
    for (const Root& beta : rs.omega) {
      Root minus = beta;
      for (Rational& c : minus) c = -c;
      T = T * (Polynomial::constant(setting.ring, 1) - character_monomial(setting, minus));
    }
  }

  // Construction-time verification of the TElement contract.
  if (!is_w_invariant(T, setting)) throw DomainError("T element is not W-invariant");
  if (!is_supersymmetric(T, setting)) throw DomainError("T element fails the membership oracle");
  if (rs.defect > 0) {
    EvResult image = ev_map(T, setting);
    if (!image.image.is_zero()) throw DomainError("T element does not vanish under ev");
  }
  return {T, setting};
}

EvResult ev_map(const Polynomial& f, const Setting& setting) {
  require_same_ring(f.ring(), setting.ring, "ev_map");
  const SuperType& t = setting.type();
  SuperType target_type = ds_target_type(t);
  SettingOptions opts;
  opts.allow_trivial = true;
  opts.allow_experimental = setting.experimental;
  Setting target = make_setting(target_type, setting.space, opts);

  Substitution s(target.ring);
  if (t.strange()) {
    int n = t.n;
    if (setting.additive()) {
      s.set_constant(n - 2, 0);
      s.set_constant(n - 1, 0);
    } else if (t.family == Family::q) {
      s.set_constant(n - 2, -1);
      s.set_constant(n - 1, 1);
    } else {
      s.set_constant(n - 2, 1);
      s.set_constant(n - 1, 1);
    }
  } else {
    int m = t.num_eps(), n = t.num_delta();
    Rational value = setting.additive() ? 0 : 1;
    s.set_constant(m - 1, value);
    s.set_constant(m + n - 1, value);
  }
  return {substitute(f, s), target};
}

std::vector<Candidate> generator_candidates(const Setting& setting, int max_degree) {
  const SuperType& t = setting.type();
  std::vector<Candidate> raw;
  raw.push_back({"1", Polynomial::constant(setting.ring, 1)});
  TElement T = t_element(setting);
  raw.push_back({"T", T.poly});

  int m = t.num_eps(), n = t.num_delta();
  auto power_sum = [&](int r, bool xs) {
    Polynomial p(setting.ring);
    int lo = xs ? 0 : m, hi = xs ? m : m + n;
    for (int v = lo; v < hi; ++v) p.add_term(Monomial::variable(v, r), 1);
    return p;
  };

  if (t.strange()) {
    for (int r = 1; r <= max_degree; r += 2) {
      raw.push_back({"p" + std::to_string(r), power_sum(r, true)});
      if (!setting.additive())
        raw.push_back({"p-" + std::to_string(r), power_sum(-r, true)});
    }
    if (t.family == Family::p) {
      // No power sum passes for P(n); offer T-multiples instead.
      for (int r = 1; r <= 2; ++r)
        raw.push_back({"T*p" + std::to_string(r), T.poly * power_sum(r, true)});
    }
  } else if (setting.additive()) {
    for (int r = 1; r <= max_degree; ++r) {
      Polynomial p = power_sum(r, true) + power_sum(r, false).scaled(r % 2 == 0 ? -1 : 1);
      raw.push_back({"p" + std::to_string(r), p});
    }
  } else {
    for (int r = 1; r <= max_degree; ++r) {
      raw.push_back({"p" + std::to_string(r), power_sum(r, true) - power_sum(r, false)});
      raw.push_back({"p-" + std::to_string(r), power_sum(-r, true) - power_sum(-r, false)});
      if (t.family == Family::osp) {
        Polynomial sym = power_sum(r, true) + power_sum(-r, true) - power_sum(r, false) -
                         power_sum(-r, false);
        raw.push_back({"ps" + std::to_string(r), sym});
      }
    }
  }

  std::vector<Candidate> verified;
  for (Candidate& c : raw)
    if (is_supersymmetric(c.poly, setting)) verified.push_back(std::move(c));
  return verified;
}

}  // namespace wgd
