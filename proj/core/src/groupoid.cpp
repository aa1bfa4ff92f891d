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

#include "weylgpd/groupoid.hpp"

#include <algorithm>
#include <functional>

#include "weylgpd/errors.hpp"

namespace wgd {

void validate_point(const Setting& setting, const Point& p) {
  if (static_cast<int>(p.size()) != setting.rs->dim())
    throw DomainError("point dimension mismatch");
  if (!setting.additive())
    for (const Rational& c : p)
      if (c == 0) throw DomainError("torus point has a zero coordinate");
}

namespace {

Rational eval_character(const Point& p, const Root& w) {
  Rational out = 1;
  for (size_t v = 0; v < w.size(); ++v) {
    if (w[v] == 0) continue;
    long e = rational_to_long(w[v]);
    Rational base = e >= 0 ? p[v] : Rational(1) / p[v];
    for (long k = 0; k < std::labs(e); ++k) out *= base;
  }
  return out;
}

}  // namespace

bool in_tau_domain(const Setting& setting, const Point& p, const Root& alpha) {
  const RootSystem& rs = *setting.rs;
  if (setting.additive()) return incidence_pairing(rs, p, alpha) == 0;
  Root a = rs.km() ? alpha : bar(alpha);
  return eval_character(p, a) == 1;
}

Point apply_generator(const Setting& setting, const GroupoidGenerator& g, const Point& p) {
  validate_point(setting, p);
  const RootSystem& rs = *setting.rs;
  if (g.kind == GroupoidGenerator::Kind::Weyl)
    return setting.additive() ? g.w.apply_to_weight(p) : g.w.apply_to_torus(p);

  // tau_{alpha,t}
  bool in_convention_set = rs.km() ? is_isotropic_root(rs, g.alpha)
                                   : std::find(rs.isotropic.begin(), rs.isotropic.end(),
                                               g.alpha) != rs.isotropic.end();
  if (!in_convention_set) {
    // p/q allow the negative of a convention root as well.
    if (!rs.km()) {
      Root neg = g.alpha;
      for (Rational& c : neg) c = -c;
      in_convention_set =
          std::find(rs.isotropic.begin(), rs.isotropic.end(), neg) != rs.isotropic.end();
    }
    if (!in_convention_set) throw DomainError("tau root is outside the convention set");
  }
  if (!setting.additive() && g.t == 0)
    throw DomainError("tau parameter must be nonzero on the torus");
  if (!in_tau_domain(setting, p, g.alpha))
    throw NotDefinedAtError("tau along " + root_to_string(rs.type, g.alpha) +
                            " is not defined at this point");
  Point out = p;
  if (setting.additive()) {
    for (size_t v = 0; v < out.size(); ++v) out[v] += g.t * g.alpha[v];
  } else {
    OneParamSubgroup c = c_beta(rs, g.alpha);
    std::vector<Rational> scale = c.at(g.t);
    for (size_t v = 0; v < out.size(); ++v) out[v] *= scale[v];
  }
  return out;
}

namespace {

std::vector<Root> incident_omega_roots(const Setting& setting, const Point& p) {
  std::vector<Root> out;
  for (const Root& a : setting.rs->omega)
    if (in_tau_domain(setting, p, a)) out.push_back(a);
  return out;
}

IsoSet max_isoset_within(const RootSystem& rs, const std::vector<Root>& pool) {
  IsoSet best;
  std::vector<int> stack;
  std::function<void(int)> walk = [&](int start) {
    if (stack.size() > best.size()) {
      best.clear();
      for (int idx : stack) best.push_back(pool[idx]);
    }
    for (int next = start; next < static_cast<int>(pool.size()); ++next) {
      stack.push_back(next);
      IsoSet candidate;
      for (int idx : stack) candidate.push_back(pool[idx]);
      if (is_isoset(rs, candidate)) walk(next + 1);
      stack.pop_back();
    }
  };
  walk(0);
  return best;
}

}  // namespace

int atyp(const Setting& setting, const Point& p) {
  validate_point(setting, p);
  const RootSystem& rs = *setting.rs;
  int best = 0;
  for (const IsoSet& a : enumerate_isosets(rs, rs.defect)) {
    if (static_cast<int>(a.size()) <= best) continue;
    bool incident = true;
    for (const Root& alpha : a)
      if (!in_tau_domain(setting, p, alpha)) {
        incident = false;
        break;
      }
    if (incident) best = static_cast<int>(a.size());
  }
  return best;
}

IncidenceData maximal_isoset_at(const Setting& setting, const Point& p) {
  validate_point(setting, p);
  IncidenceData data;
  for (const Root& a : setting.rs->isotropic)
    if (in_tau_domain(setting, p, a)) data.e_set.push_back(a);
  data.f_set = max_isoset_within(*setting.rs, incident_omega_roots(setting, p));
  return data;
}

OrbitDescription orbit_description(const Setting& setting, const Point& p) {
  IncidenceData data = maximal_isoset_at(setting, p);
  OrbitDescription d;
  d.base = p;
  d.e_set = std::move(data.e_set);
  d.f_set = std::move(data.f_set);
  d.dim = static_cast<int>(d.f_set.size());
  return d;
}

Point replay_witness(const Setting& setting, const Point& lambda, const OrbitWitness& witness) {
  Point p = lambda;
  for (const auto& [alpha, t] : witness.taus) {
    GroupoidGenerator g;
    g.kind = GroupoidGenerator::Kind::Tau;
    g.alpha = alpha;
    g.t = t;
    p = apply_generator(setting, g, p);
  }
  GroupoidGenerator g;
  g.kind = GroupoidGenerator::Kind::Weyl;
  g.w = witness.w;
  return apply_generator(setting, g, p);
}

namespace {

// Exact solve of sum_k t_k * cols[k] = target; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(const std::vector<Root>& cols,
                                                  const Root& target) {
  size_t rows = target.size(), k = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < k; ++c) m[r][c] = cols[c][r];
    m[r][k] = target[r];
  }
  size_t rank = 0;
  std::vector<int> pivot_col(k, -1);
  for (size_t c = 0; c < k && rank < rows; ++c) {
    size_t pr = rank;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[rank], m[pr]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (size_t j = c; j <= k; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_col[c] = static_cast<int>(rank);
    ++rank;
  }
  // Inconsistency: zero row with nonzero rhs.
  for (size_t r = 0; r < rows; ++r) {
    bool zero = true;
    for (size_t c = 0; c < k; ++c)
      if (m[r][c] != 0) zero = false;
    if (zero && m[r][k] != 0) return std::nullopt;
  }
  std::vector<Rational> t(k, Rational(0));
  for (size_t c = 0; c < k; ++c)
    if (pivot_col[c] >= 0) t[c] = m[pivot_col[c]][k] / m[pivot_col[c]][c];
  return t;
}

// Multiplicative solve: ratios must factor through the one-parameter
// subgroups of F, whose supports are disjoint coordinate pairs.
std::optional<std::vector<Rational>> solve_torus(const RootSystem& rs, const IsoSet& f_set,
                                                 const std::vector<Rational>& ratio) {
  std::vector<bool> covered(ratio.size(), false);
  std::vector<Rational> t(f_set.size(), Rational(1));
  for (size_t k = 0; k < f_set.size(); ++k) {
    OneParamSubgroup c = c_beta(rs, f_set[k]);
    bool first = true;
    for (size_t v = 0; v < ratio.size(); ++v) {
      if (c.exponents[v] == 0) continue;
      if (covered[v]) throw DomainError("iso-set supports overlap");
      covered[v] = true;
      if (std::labs(c.exponents[v]) != 1)
        throw DomainError("unexpected one-parameter exponent");
      Rational implied = c.exponents[v] == 1 ? ratio[v] : Rational(1) / ratio[v];
      if (first) {
        t[k] = implied;
        first = false;
      } else if (t[k] != implied) {
        return std::nullopt;
      }
    }
    if (t[k] == 0) return std::nullopt;
  }
  for (size_t v = 0; v < ratio.size(); ++v)
    if (!covered[v] && ratio[v] != 1) return std::nullopt;
  return t;
}

}  // namespace

std::optional<OrbitWitness> orbit_contains(const Setting& setting, const Point& lambda,
                                           const Point& mu) {
  validate_point(setting, lambda);
  validate_point(setting, mu);
  const RootSystem& rs = *setting.rs;
  IsoSet f_set = maximal_isoset_at(setting, lambda).f_set;

  for (const SignedPerm& w : rs.weyl_elements) {
    SignedPerm winv = w.inverse();
    Point target = setting.additive() ? winv.apply_to_weight(mu) : winv.apply_to_torus(mu);
    std::optional<std::vector<Rational>> t;
    if (setting.additive()) {
      Root diff(lambda.size());
      for (size_t v = 0; v < lambda.size(); ++v) diff[v] = target[v] - lambda[v];
      t = solve_linear(f_set, diff);
    } else {
      std::vector<Rational> ratio(lambda.size());
      for (size_t v = 0; v < lambda.size(); ++v) ratio[v] = target[v] / lambda[v];
      t = solve_torus(rs, f_set, ratio);
    }
    if (!t) continue;
    OrbitWitness witness;
    witness.w = w;
    for (size_t k = 0; k < f_set.size(); ++k) {
      if (setting.additive() && (*t)[k] == 0) continue;  // identity translation
      witness.taus.push_back({f_set[k], (*t)[k]});
    }
    if (!setting.additive())
      std::erase_if(witness.taus, [](const auto& pr) { return pr.second == 1; });
    Point endpoint = replay_witness(setting, lambda, witness);
    if (endpoint != mu)
      throw DomainError("internal: witness replay mismatch");
    return witness;
  }
  return std::nullopt;
}

bool equivalent(const Setting& setting, const Point& lambda, const Point& mu) {
  return orbit_contains(setting, lambda, mu).has_value() ||
         orbit_contains(setting, mu, lambda).has_value();
}

}  // namespace wgd
