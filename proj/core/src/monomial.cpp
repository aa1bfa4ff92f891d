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

#include "weylgpd/monomial.hpp"

#include <algorithm>

#include "weylgpd/errors.hpp"

namespace wgd {

Monomial Monomial::variable(int v, int e) {
  Monomial m;
  if (e != 0) m.entries_.push_back({v, e});
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (const Entry& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == e.first)
      m.entries_.back().second += e.second;
    else
      m.entries_.push_back(e);
  }
  std::erase_if(m.entries_, [](const Entry& e) { return e.second == 0; });
  return m;
}

int Monomial::exponent(int v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, int x) { return e.first < x; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

int64_t Monomial::total_degree() const {
  int64_t d = 0;
  for (const Entry& e : entries_) d += e.second;
  return d;
}

bool Monomial::is_affine() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second >= 0; });
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial m;
  m.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin(), b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      m.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      m.entries_.push_back(*b++);
    } else {
      int32_t e = a->second + b->second;
      if (e != 0) m.entries_.push_back({a->first, e});
      ++a, ++b;
    }
  }
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (Entry& e : m.entries_) e.second = -e.second;
  return m;
}

Monomial Monomial::pow(int k) const {
  Monomial m;
  if (k == 0) return m;
  m = *this;
  for (Entry& e : m.entries_) e.second *= k;
  return m;
}

std::optional<Monomial> Monomial::divided_by_affine(const Monomial& other) const {
  Monomial q = divided_by(other);
  if (!q.is_affine()) return std::nullopt;
  return q;
}

bool Monomial::divides(const Monomial& m) const {
  for (const Entry& e : entries_)
    if (m.exponent(e.first) < e.second) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      m.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      m.entries_.push_back(*j++);
    } else {
      m.entries_.push_back({i->first, std::max(i->second, j->second)});
      ++i, ++j;
    }
  }
  std::erase_if(m.entries_, [](const Entry& e) { return e.second == 0; });
  return m;
}

bool Monomial::disjoint_support(const Monomial& other) const {
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() && j != other.entries_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else
      return false;
  }
  return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Lexicographic on the dense vector: first differing variable decides,
  // larger exponent there means larger monomial.
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    int va = i != a.entries_.end() ? i->first : INT32_MAX;
    int vb = j != b.entries_.end() ? j->first : INT32_MAX;
    int v = std::min(va, vb);
    int ea = va == v ? i->second : 0;
    int eb = vb == v ? j->second : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return 0;
}

}  // namespace wgd
