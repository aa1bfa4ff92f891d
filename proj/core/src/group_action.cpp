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

#include "weylgpd/group_action.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "weylgpd/errors.hpp"

namespace wgd {

SignedPerm::SignedPerm(std::vector<int> img, std::vector<int8_t> sign)
    : img_(std::move(img)), sign_(std::move(sign)) {
  if (img_.size() != sign_.size()) throw DomainError("signed permutation size mismatch");
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw DomainError("not a permutation");
    seen[v] = true;
  }
  for (int8_t s : sign_)
    if (s != 1 && s != -1) throw DomainError("sign must be +-1");
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return SignedPerm(std::move(img), std::vector<int8_t>(n, 1));
}

SignedPerm SignedPerm::transposition(int n, int i, int j) {
  SignedPerm w = identity(n);
  std::swap(w.img_[i], w.img_[j]);
  return w;
}

SignedPerm SignedPerm::flip(int n, int i) {
  SignedPerm w = identity(n);
  w.sign_[i] = -1;
  return w;
}

bool SignedPerm::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (img_[v] != v || sign_[v] != 1) return false;
  return true;
}

SignedPerm SignedPerm::then(const SignedPerm& next) const {
  if (size() != next.size()) throw DomainError("signed permutation size mismatch");
  std::vector<int> img(size());
  std::vector<int8_t> sign(size());
  for (int v = 0; v < size(); ++v) {
    img[v] = next.img_[img_[v]];
    sign[v] = static_cast<int8_t>(sign_[v] * next.sign_[img_[v]]);
  }
  return SignedPerm(std::move(img), std::move(sign));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> img(size());
  std::vector<int8_t> sign(size());
  for (int v = 0; v < size(); ++v) {
    img[img_[v]] = v;
    sign[img_[v]] = sign_[v];
  }
  return SignedPerm(std::move(img), std::move(sign));
}

std::vector<Rational> SignedPerm::apply_to_weight(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != size()) throw DomainError("point dimension mismatch");
  std::vector<Rational> out(x.size());
  for (int v = 0; v < size(); ++v) out[img_[v]] = sign_[v] > 0 ? x[v] : -x[v];
  return out;
}

std::vector<Rational> SignedPerm::apply_to_torus(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != size()) throw DomainError("point dimension mismatch");
  std::vector<Rational> out(x.size());
  for (int v = 0; v < size(); ++v) {
    if (x[v] == 0) throw DomainError("torus point has zero coordinate");
    out[img_[v]] = sign_[v] > 0 ? x[v] : Rational(1) / x[v];
  }
  return out;
}

Polynomial SignedPerm::apply(const Polynomial& f) const {
  const RingPtr& ring = f.ring();
  if (ring->arity() != size())
    throw DomainError("group element does not act on this ring");
  bool laurent = ring->laurent();
  Polynomial out(ring);
  // (w f)(x) = f(w^{-1} x): substitute v -> sign[v] * X_{img[v]}, where in
  // the Laurent ring a -1 sign inverts the variable instead.
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Entry> entries;
    Rational coef = c;
    for (const auto& [v, e] : m.entries()) {
      int target = img_[v];
      if (sign_[v] < 0) {
        if (laurent) {
          entries.push_back({target, -e});
          continue;
        }
        if (e % 2 != 0) coef = -coef;
      }
      entries.push_back({target, e});
    }
    out.add_term(Monomial::from_entries(std::move(entries)), coef);
  }
  return out;
}

std::string SignedPerm::key() const {
  std::string k;
  for (int v = 0; v < size(); ++v) {
    k += sign_[v] > 0 ? '+' : '-';
    k += std::to_string(img_[v]);
    k += '.';
  }
  return k;
}

std::vector<SignedPerm> generate_group(const std::vector<SignedPerm>& generators, int n,
                                       size_t cap) {
  std::set<std::string> seen;
  std::vector<SignedPerm> elements;
  std::deque<SignedPerm> queue;
  SignedPerm id = SignedPerm::identity(n);
  seen.insert(id.key());
  elements.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    SignedPerm w = queue.front();
    queue.pop_front();
    for (const SignedPerm& g : generators) {
      SignedPerm next = w.then(g);
      if (seen.insert(next.key()).second) {
        if (elements.size() >= cap) throw DomainError("group generation exceeded cap");
        elements.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](const SignedPerm& a, const SignedPerm& b) { return a.key() < b.key(); });
  return elements;
}

Polynomial reynolds(const Polynomial& f, const std::vector<SignedPerm>& group) {
  if (group.empty()) throw DomainError("Reynolds operator over an empty group");
  Polynomial sum(f.ring());
  for (const SignedPerm& w : group) sum = sum + w.apply(f);
  return sum.scaled(Rational(1, static_cast<unsigned long>(group.size())));
}

}  // namespace wgd
