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

#include "weylgpd/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "weylgpd/errors.hpp"
#include "weylgpd/poly_text.hpp"

namespace wgd {

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    require_same_ring(g.ring(), ring_, "ideal generator");
    generators_.push_back(std::move(g));
  }
}

namespace {

// Variables of f's ring are matched to the target ring by name.
Polynomial cast_to_ring(const Polynomial& f, const RingPtr& target) { return rename_into(f, target); }

struct OrderDesc {
  const MonomialOrder* order;
  int arity;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->cmp(a, b, arity) > 0;
  }
};

using OrderedTerms = std::map<Monomial, Rational, OrderDesc>;

OrderedTerms to_ordered(const Polynomial& f, const MonomialOrder& order, int arity) {
  OrderedTerms t(OrderDesc{&order, arity});
  for (const auto& [m, c] : f.terms()) t.emplace(m, c);
  return t;
}

Polynomial from_ordered(const RingPtr& ring, const OrderedTerms& t) {
  Polynomial f(ring);
  for (const auto& [m, c] : t) f.add_term(m, c);
  return f;
}

void add_scaled(OrderedTerms& acc, const Polynomial& g, const Monomial& shift, const Rational& c) {
  for (const auto& [m, k] : g.terms()) {
    Monomial mm = m.times(shift);
    Rational v = k * c;
    auto [it, fresh] = acc.emplace(mm, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) acc.erase(it);
    }
  }
}

// Full normal form of f against basis (each with leading monomial lts[i]
// under `order`). Deterministic: the first divisor in basis order is used.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lts, const std::vector<Rational>& lcs,
                       const MonomialOrder& order, const GroebnerBudget& budget) {
  int arity = f.ring()->arity();
  OrderedTerms work = to_ordered(f, order, arity);
  OrderedTerms done(OrderDesc{&order, arity});
  while (!work.empty()) {
    auto [m, c] = *work.begin();
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (lts[i].divides(m)) {
        Monomial shift = m.divided_by(lts[i]);
        add_scaled(work, basis[i], shift, -c / lcs[i]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      done.emplace(m, c);
      work.erase(work.begin());
    }
    if (!work.empty() && work.begin()->first.total_degree() > budget.max_degree)
      throw BudgetExceededError("normal form exceeded degree budget");
  }
  return from_ordered(f.ring(), done);
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  int arity = f.ring()->arity();
  auto it = f.terms().begin();
  Monomial best = it->first;
  for (++it; it != f.terms().end(); ++it)
    if (order.cmp(it->first, best, arity) > 0) best = it->first;
  return best;
}

Polynomial monic_under(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  Monomial lt = leading_monomial(f, order);
  return f.scaled(Rational(1) / f.terms().at(lt));
}

struct Pair {
  int i, j;
  Monomial lcm;
  int64_t degree;
};

bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& order, int arity) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (int c = order.cmp(a.lcm, b.lcm, arity)) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, const MonomialOrder& order, const GroebnerBudget& budget)
      : ring_(ring), order_(order), budget_(budget), arity_(ring->arity()) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& input) {
    for (const Polynomial& g : input)
      if (!g.is_zero()) add_generator(g.monic());
    long pops = 0;
    while (!pairs_.empty()) {
      if (++pops > budget_.max_pairs)
        throw BudgetExceededError("Buchberger exceeded S-pair budget");
      auto best = pairs_.begin();
      for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it)
        if (pair_before(*it, *best, order_, arity_)) best = it;
      Pair p = *best;
      pairs_.erase(best);
      Polynomial s = spoly(p);
      Polynomial h = reduce_full(s, basis_, lts_, lcs_, order_, budget_);
      if (h.is_zero()) continue;
      if (h.total_degree() > budget_.max_degree)
        throw BudgetExceededError("Buchberger exceeded degree budget");
      add_generator(h.monic());
      if (h.is_constant()) break;  // unit ideal
    }
    return finalize();
  }

 private:
  void add_generator(const Polynomial& g) {
    int t = static_cast<int>(basis_.size());
    Monomial lt = leading_monomial(g, order_);
    // Gebauer-Moeller update of the pair set.
    std::vector<Pair> fresh;
    for (int i = 0; i < t; ++i)
      fresh.push_back({i, t, Monomial::lcm(lts_[i], lt), 0});
    for (Pair& p : fresh) p.degree = p.lcm.total_degree();
    // M criterion: drop pairs whose lcm is strictly divisible by another
    // fresh pair's lcm.
    std::vector<bool> keep(fresh.size(), true);
    for (size_t a = 0; a < fresh.size(); ++a)
      for (size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[a]) continue;
        if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm) && keep[b])
          keep[a] = false;
      }
    // F criterion: one representative per lcm class; a coprime member kills
    // the whole class.
    std::map<std::string, std::vector<size_t>> classes;
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      std::string key;
      for (const auto& [v, e] : fresh[a].lcm.entries())
        key += std::to_string(v) + "^" + std::to_string(e) + ".";
      classes[key].push_back(a);
    }
    std::vector<Pair> kept;
    for (auto& [key, members] : classes) {
      bool coprime = false;
      for (size_t a : members)
        if (fresh[a].lcm == lts_[fresh[a].i].times(lt)) coprime = true;
      if (!coprime) kept.push_back(fresh[members.front()]);
    }
    // B criterion: prune old pairs strictly covered by the new leading term.
    std::erase_if(pairs_, [&](const Pair& p) {
      return lt.divides(p.lcm) && Monomial::lcm(lts_[p.i], lt) != p.lcm &&
             Monomial::lcm(lts_[p.j], lt) != p.lcm;
    });
    for (Pair& p : kept) pairs_.push_back(std::move(p));
    basis_.push_back(g);
    lts_.push_back(lt);
    lcs_.push_back(g.terms().count(lt) ? g.terms().at(lt) : Rational(1));
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    Monomial mf = p.lcm.divided_by(lts_[p.i]);
    Monomial mg = p.lcm.divided_by(lts_[p.j]);
    return f.times_monomial(mf, Rational(1) / lcs_[p.i]) -
           g.times_monomial(mg, Rational(1) / lcs_[p.j]);
  }

  std::vector<Polynomial> finalize() {
    // Minimal basis: drop elements whose leading term another divides.
    std::vector<bool> alive(basis_.size(), true);
    for (size_t a = 0; a < basis_.size(); ++a)
      for (size_t b = 0; b < basis_.size(); ++b) {
        if (a == b || !alive[a] || !alive[b]) continue;
        if (lts_[b].divides(lts_[a]) && (lts_[b] != lts_[a] || b < a)) alive[a] = false;
      }
    std::vector<Polynomial> minimal;
    std::vector<Monomial> mlts;
    std::vector<Rational> mlcs;
    for (size_t a = 0; a < basis_.size(); ++a)
      if (alive[a]) {
        minimal.push_back(basis_[a]);
        mlts.push_back(lts_[a]);
        mlcs.push_back(lcs_[a]);
      }
    // Autoreduce until stable.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial> others;
        std::vector<Monomial> olts;
        std::vector<Rational> olcs;
        for (size_t b = 0; b < minimal.size(); ++b)
          if (b != a) {
            others.push_back(minimal[b]);
            olts.push_back(mlts[b]);
            olcs.push_back(mlcs[b]);
          }
        Polynomial r = others.empty()
                           ? minimal[a]
                           : reduce_full(minimal[a], others, olts, olcs, order_, budget_);
        r = monic_under(r, order_);
        if (r != minimal[a]) {
          minimal[a] = r;
          mlts[a] = leading_monomial(r, order_);
          mlcs[a] = 1;
          changed = true;
        }
      }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& x, const Polynomial& y) {
      return order_.cmp(leading_monomial(x, order_), leading_monomial(y, order_), arity_) < 0;
    });
    return minimal;
  }

  RingPtr ring_;
  MonomialOrder order_;
  GroebnerBudget budget_;
  int arity_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> lts_;
  std::vector<Rational> lcs_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(const IdealPresentation& ideal,
                                               const MonomialOrder& order,
                                               const GroebnerBudget& budget) {
  if (!ideal.ring()) throw DomainError("ideal has no ring");
  if (ideal.ring()->laurent())
    throw DomainError("Groebner bases need an affine ring; use laurent_to_affine first");
  auto& slot = ideal.cache_slot();
  if (slot && slot->order == order) return slot->basis;
  Buchberger engine(ideal.ring(), order, budget);
  std::vector<Polynomial> basis = engine.run(ideal.generators());
  slot = std::make_shared<IdealPresentation::Cache>(IdealPresentation::Cache{order, basis});
  return basis;
}

Polynomial normal_form(const Polynomial& f, const IdealPresentation& ideal,
                       const MonomialOrder& order, const GroebnerBudget& budget) {
  require_same_ring(f.ring(), ideal.ring(), "normal_form");
  std::vector<Polynomial> basis = reduced_groebner_basis(ideal, order, budget);
  if (basis.empty()) return f;
  std::vector<Monomial> lts;
  std::vector<Rational> lcs;
  for (const Polynomial& g : basis) {
    lts.push_back(leading_monomial(g, order));
    lcs.push_back(1);
  }
  return reduce_full(f, basis, lts, lcs, order, budget);
}

bool ideal_member(const Polynomial& f, const IdealPresentation& ideal,
                  const GroebnerBudget& budget) {
  return normal_form(f, ideal, MonomialOrder::grevlex(), budget).is_zero();
}

bool is_unit_ideal(const IdealPresentation& ideal, const GroebnerBudget& budget) {
  std::vector<Polynomial> basis = reduced_groebner_basis(ideal, MonomialOrder::grevlex(), budget);
  return basis.size() == 1 && basis.front().is_constant();
}

bool radical_membership(const Polynomial& f, const IdealPresentation& ideal,
                        const GroebnerBudget& budget) {
  require_same_ring(f.ring(), ideal.ring(), "radical_membership");
  if (f.is_zero()) return true;
  RingPtr ext = extend_ring(ideal.ring(), {"@z"});
  int z = ext->arity() - 1;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(cast_to_ring(g, ext));
  gens.push_back(cast_to_ring(f, ext) * Polynomial::variable(ext, z) -
                 Polynomial::constant(ext, 1));
  return is_unit_ideal(IdealPresentation(ext, std::move(gens)), budget);
}

IdealPresentation elimination_ideal(const IdealPresentation& ideal, const std::vector<int>& drop,
                                    const GroebnerBudget& budget) {
  for (int v : drop)
    if (v < 0 || v >= ideal.ring()->arity()) throw DomainError("eliminated variable out of range");
  MonomialOrder order = MonomialOrder::block_elimination(drop);
  std::vector<Polynomial> basis = reduced_groebner_basis(ideal, order, budget);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis) {
    bool clean = true;
    for (int v : drop)
      if (g.involves(v)) {
        clean = false;
        break;
      }
    if (clean) kept.push_back(g);
  }
  return IdealPresentation(ideal.ring(), std::move(kept));
}

IdealPresentation ideal_intersect(const IdealPresentation& a, const IdealPresentation& b,
                                  const GroebnerBudget& budget) {
  require_same_ring(a.ring(), b.ring(), "ideal_intersect");
  if (a.generators().empty()) return a;  // (0) cap J = (0)
  if (b.generators().empty()) return b;
  RingPtr ext = extend_ring(a.ring(), {"@t"});
  int t = ext->arity() - 1;
  Polynomial tv = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - tv;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) gens.push_back(cast_to_ring(g, ext) * tv);
  for (const Polynomial& g : b.generators()) gens.push_back(cast_to_ring(g, ext) * one_minus_t);
  IdealPresentation mixed(ext, std::move(gens));
  IdealPresentation elim = elimination_ideal(mixed, {t}, budget);
  std::vector<Polynomial> back;
  for (const Polynomial& g : elim.generators()) back.push_back(cast_to_ring(g, a.ring()));
  return IdealPresentation(a.ring(), std::move(back));
}

RingPtr laurent_chart_ring(const RingPtr& laurent_ring, std::vector<int>* inverse_of) {
  if (!laurent_ring->laurent()) throw DomainError("chart of a non-Laurent ring");
  std::vector<std::string> names = laurent_ring->names();
  int n = laurent_ring->arity();
  for (int v = 0; v < n; ++v) names.push_back("@i:" + laurent_ring->name(v));
  if (inverse_of) {
    inverse_of->resize(n);
    for (int v = 0; v < n; ++v) (*inverse_of)[v] = n + v;
  }
  return make_ring(std::move(names), RingMode::Affine);
}

Polynomial to_chart(const Polynomial& laurent_poly, const RingPtr& chart_ring) {
  int n = laurent_poly.ring()->arity();
  Polynomial out(chart_ring);
  for (const auto& [m, c] : laurent_poly.terms()) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [v, e] : m.entries()) {
      if (e >= 0)
        entries.push_back({v, e});
      else
        entries.push_back({n + v, -e});
    }
    out.add_term(Monomial::from_entries(std::move(entries)), c);
  }
  return out;
}

Polynomial from_chart(const Polynomial& chart_poly, const RingPtr& laurent_ring,
                      const std::vector<int>& inverse_of) {
  int n = laurent_ring->arity();
  Polynomial out(laurent_ring);
  for (const auto& [m, c] : chart_poly.terms()) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [v, e] : m.entries()) {
      if (v < n)
        entries.push_back({v, e});
      else
        entries.push_back({v - n, -e});
    }
    out.add_term(Monomial::from_entries(std::move(entries)), c);
  }
  return out;
}

LaurentChart laurent_to_affine(const IdealPresentation& laurent_ideal) {
  LaurentChart chart;
  chart.laurent_ring = laurent_ideal.ring();
  RingPtr ext = laurent_chart_ring(chart.laurent_ring, &chart.inverse_of);
  int n = chart.laurent_ring->arity();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : laurent_ideal.generators())
    gens.push_back(to_chart(monomial_primitive_part(g), ext));
  for (int v = 0; v < n; ++v)
    gens.push_back(Polynomial::variable(ext, v) * Polynomial::variable(ext, n + v) -
                   Polynomial::constant(ext, 1));
  chart.affine = IdealPresentation(ext, std::move(gens));
  return chart;
}

bool laurent_ideal_member(const Polynomial& f, const IdealPresentation& laurent_ideal,
                          const GroebnerBudget& budget) {
  LaurentChart chart = laurent_to_affine(laurent_ideal);
  Polynomial g = to_chart(monomial_primitive_part(f), chart.affine.ring());
  return ideal_member(g, chart.affine, budget);
}

bool laurent_radical_membership(const Polynomial& f, const IdealPresentation& laurent_ideal,
                                const GroebnerBudget& budget) {
  LaurentChart chart = laurent_to_affine(laurent_ideal);
  Polynomial g = to_chart(monomial_primitive_part(f), chart.affine.ring());
  return radical_membership(g, chart.affine, budget);
}

IdealPresentation laurent_elimination_ideal(const IdealPresentation& laurent_ideal,
                                            const std::vector<int>& drop,
                                            const GroebnerBudget& budget) {
  LaurentChart chart = laurent_to_affine(laurent_ideal);
  std::vector<int> front;
  for (int v : drop) {
    front.push_back(v);
    front.push_back(chart.inverse_of[v]);
  }
  IdealPresentation elim = elimination_ideal(chart.affine, front, budget);
  std::vector<Polynomial> back;
  for (const Polynomial& g : elim.generators())
    back.push_back(from_chart(g, chart.laurent_ring, chart.inverse_of));
  return IdealPresentation(chart.laurent_ring, std::move(back));
}

IdealPresentation laurent_ideal_intersect(const IdealPresentation& a, const IdealPresentation& b,
                                          const GroebnerBudget& budget) {
  require_same_ring(a.ring(), b.ring(), "laurent_ideal_intersect");
  if (a.generators().empty()) return a;
  if (b.generators().empty()) return b;
  LaurentChart ca = laurent_to_affine(a);
  LaurentChart cb = laurent_to_affine(b);
  IdealPresentation meet = ideal_intersect(ca.affine, cb.affine, budget);
  std::vector<Polynomial> back;
  for (const Polynomial& g : meet.generators()) {
    Polynomial h = from_chart(g, a.ring(), ca.inverse_of);
    h = monomial_primitive_part(h);
    if (!h.is_zero()) back.push_back(h);
  }
  return IdealPresentation(a.ring(), std::move(back));
}

std::string canonical_ideal_key(const IdealPresentation& ideal, const GroebnerBudget& budget) {
  std::vector<Polynomial> basis;
  if (ideal.ring()->laurent()) {
    LaurentChart chart = laurent_to_affine(ideal);
    basis = reduced_groebner_basis(chart.affine, MonomialOrder::grevlex(), budget);
  } else {
    basis = reduced_groebner_basis(ideal, MonomialOrder::grevlex(), budget);
  }
  std::string key;
  for (const Polynomial& g : basis) {
    key += format_polynomial(g);
    key += ";";
  }
  return key;
}

}  // namespace wgd
