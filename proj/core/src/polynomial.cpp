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

#include "weylgpd/polynomial.hpp"

#include <algorithm>

#include "weylgpd/errors.hpp"

namespace wgd {

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int v) {
  if (v < 0 || v >= ring->arity()) throw DomainError("variable index out of range");
  Polynomial p(ring);
  p.add_term(Monomial::variable(v), 1);
  return p;
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& m, const Rational& c) {
  if (!ring->laurent() && !m.is_affine())
    throw DomainError("negative exponent in affine ring");
  if (m.max_var() >= ring->arity()) throw DomainError("variable index out of range");
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

int64_t Polynomial::total_degree() const {
  int64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Polynomial::degree_in(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    d = first ? e : std::max(d, e);
    first = false;
  }
  return terms_.empty() ? 0 : d;
}

int Polynomial::min_exponent_in(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    d = first ? e : std::min(d, e);
    first = false;
  }
  return terms_.empty() ? 0 : d;
}

bool Polynomial::involves(int v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) != 0) return true;
  return false;
}

bool Polynomial::is_affine() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_affine()) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "add");
  Polynomial p = *this;
  for (const auto& [m, c] : other.terms_) p.add_term(m, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "sub");
  Polynomial p = *this;
  for (const auto& [m, c] : other.terms_) p.add_term(m, -c);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "mul");
  Polynomial p(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) p.add_term(ma.times(mb), ca * cb);
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  for (const auto& [mm, k] : terms_) p.terms_.emplace(mm.times(m), k * c);
  return p;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw DomainError("negative power");
  Polynomial acc = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = k > 1 ? base * base : base;
    k >>= 1;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_->same_as(*other.ring_)) return false;
  return terms_ == other.terms_;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != ring_->arity())
    throw DomainError("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [var, e] : m.entries()) {
      const Rational& x = point[var];
      if (x == 0 && e < 0) throw DomainError("zero coordinate raised to negative power");
      Rational p = 1;
      Rational base = e >= 0 ? x : Rational(1) / x;
      for (int i = 0; i < std::abs(e); ++i) p *= base;
      v *= p;
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / terms_.begin()->second);
}

Substitution& Substitution::set(int source_var, Polynomial image) {
  require_same_ring(image.ring(), target_, "substitution image");
  images_.insert_or_assign(source_var, std::move(image));
  return *this;
}

Substitution& Substitution::set_constant(int source_var, const Rational& c) {
  return set(source_var, Polynomial::constant(target_, c));
}

namespace {

// Image of a unit monomial raised to a (possibly negative) power.
Polynomial unit_pow(const Polynomial& unit, int e) {
  const auto& [m, c] = *unit.terms().begin();
  if (e >= 0) return Polynomial::term(unit.ring(), m.pow(e), [&] {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= c;
    return r;
  }());
  Rational r = 1;
  for (int i = 0; i < -e; ++i) r /= c;
  return Polynomial::term(unit.ring(), m.pow(e), r);
}

}  // namespace

Polynomial substitute(const Polynomial& f, const Substitution& s) {
  const RingPtr& target = s.target();
  const RingPtr& source = f.ring();

  // Resolve each source variable to its image once.
  std::vector<Polynomial> image(source->arity(), Polynomial(target));
  std::vector<bool> have(source->arity(), false);
  for (const auto& [v, img] : s.images()) {
    if (v < 0 || v >= source->arity()) throw DomainError("substitution rebinds unknown variable");
    image[v] = img;
    have[v] = true;
  }
  auto resolve = [&](int v) -> const Polynomial& {
    if (!have[v]) {
      int tv = target->index_of(source->name(v));
      if (tv < 0)
        throw DomainError("substitution: variable '" + source->name(v) +
                          "' missing from target ring");
      image[v] = Polynomial::variable(target, tv);
      have[v] = true;
    }
    return image[v];
  };

  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (const auto& [v, e] : m.entries()) {
      const Polynomial& img = resolve(v);
      if (e >= 0) {
        term = term * img.pow(e);
      } else {
        if (!target->laurent())
          throw DomainError("negative exponent cannot map into an affine ring");
        if (!img.is_unit_monomial())
          throw DomainError("Laurent substitution: inverse of '" + source->name(v) +
                            "' occurs but its image is not a unit");
        term = term * unit_pow(img, e);
      }
    }
    out = out + term;
  }
  return out;
}

Polynomial monomial_primitive_part(const Polynomial& f, Monomial* unit_out) {
  if (f.is_zero()) {
    if (unit_out) *unit_out = Monomial::one();
    return f;
  }
  std::vector<Monomial::Entry> shift;
  // Collect per-variable minimal exponents.
  std::map<int, int> min_exp;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::map<int, int> exps;
    for (const auto& [v, e] : m.entries()) exps[v] = e;
    if (first) {
      min_exp = exps;
      first = false;
    } else {
      for (auto& [v, e] : min_exp) e = std::min(e, exps.count(v) ? exps[v] : 0);
      for (auto& [v, e] : exps)
        if (!min_exp.count(v)) min_exp[v] = std::min(0, e);
    }
  }
  Monomial unit;
  for (const auto& [v, e] : min_exp)
    if (e != 0) shift.push_back({v, e});
  unit = Monomial::from_entries(shift);
  if (unit_out) *unit_out = unit;
  if (unit.is_one()) return f;
  Polynomial out(f.ring());
  Monomial inv = unit.inverse();
  for (const auto& [m, c] : f.terms()) out.add_term(m.times(inv), c);
  return out;
}

namespace {

// Plain multivariate exact division of affine polynomials under the
// canonical order; nullopt when a leading term fails to divide.
std::optional<Polynomial> divide_exact_affine(const Polynomial& f, const Polynomial& g) {
  Polynomial q(f.ring());
  Polynomial r = f;
  const auto& [gm, gc] = *g.terms().begin();
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms().begin();
    auto quot = rm.divided_by_affine(gm);
    if (!quot) return std::nullopt;
    Rational c = rc / gc;
    q.add_term(*quot, c);
    r = r - g.times_monomial(*quot, c);
  }
  return q;
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "divide_exact");
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (f.is_zero()) return Polynomial::zero(f.ring());

  if (!f.ring()->laurent()) {
    return divide_exact_affine(f, g);
  }
  // Laurent: clear monomial units, divide primitive parts, restore the unit.
  Monomial uf, ug;
  Polynomial fp = monomial_primitive_part(f, &uf);
  Polynomial gp = monomial_primitive_part(g, &ug);
  auto q = divide_exact_affine(fp, gp);
  if (!q) return std::nullopt;
  return q->times_monomial(uf.divided_by(ug), 1);
}

Polynomial rename_into(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->same_as(*target)) return f;
  std::vector<int> map(f.ring()->arity(), -1);
  for (int v = 0; v < f.ring()->arity(); ++v) map[v] = target->index_of(f.ring()->name(v));
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [v, e] : m.entries()) {
      if (map[v] < 0)
        throw DomainError("rename: variable '" + f.ring()->name(v) + "' missing from target");
      entries.push_back({map[v], e});
    }
    out.add_term(Monomial::from_entries(std::move(entries)), c);
  }
  return out;
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, int var, int* offset_out) {
  int lo = f.min_exponent_in(var);
  int hi = f.degree_in(var);
  if (offset_out) *offset_out = lo;
  std::vector<Polynomial> out;
  if (f.is_zero()) return out;
  out.assign(hi - lo + 1, Polynomial(f.ring()));
  for (const auto& [m, c] : f.terms()) {
    int e = m.exponent(var);
    Monomial rest = m.times(Monomial::variable(var, -e));
    out[e - lo].add_term(rest, c);
  }
  return out;
}

}  // namespace wgd
