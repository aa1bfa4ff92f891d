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

#include "weylgpd/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "weylgpd/errors.hpp"

namespace wgd {

std::string family_name(Family f) {
  switch (f) {
    case Family::gl:
      return "gl";
    case Family::sl:
      return "sl";
    case Family::osp:
      return "osp";
    case Family::p:
      return "p";
    case Family::q:
      return "q";
  }
  return "?";
}

void SuperType::validate() const {
  switch (family) {
    case Family::gl:
      if (m < 0 || n < 0 || m + n == 0) throw DomainError("gl(m|n) needs m,n >= 0, not both 0");
      break;
    case Family::sl:
      if (m < 0 || n < 0 || m + n == 0) throw DomainError("sl(m|n) needs m,n >= 0, not both 0");
      if (m == n) throw DomainError("sl(m|n) requires m != n");
      break;
    case Family::osp:
      if (r < 1 || n < 0) throw DomainError("osp(r|2n) needs r >= 1, n >= 0");
      break;
    case Family::p:
    case Family::q:
      if (n < 1) throw DomainError(family_name(family) + "(n) requires n >= 1");
      break;
  }
}

std::string SuperType::to_string() const {
  switch (family) {
    case Family::gl:
    case Family::sl:
      return family_name(family) + "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    case Family::osp:
      return "osp(" + std::to_string(r) + "|" + std::to_string(2 * n) + ")";
    case Family::p:
    case Family::q:
      return family_name(family) + "(" + std::to_string(n) + ")";
  }
  return "?";
}

namespace {

Root unit(int dim, int v, int coef = 1) {
  Root a(dim, Rational(0));
  a[v] = coef;
  return a;
}

Root combine(int dim, int v1, int c1, int v2, int c2) {
  Root a(dim, Rational(0));
  a[v1] += c1;
  a[v2] += c2;
  return a;
}

bool root_less(const Root& a, const Root& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Root negate(const Root& a) {
  Root b = a;
  for (Rational& c : b) c = -c;
  return b;
}

/// Rank of the rational matrix whose rows are the given vectors.
int rank_of(std::vector<Root> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// A basis (subset of the input, in input order) of the span.
std::vector<Root> span_basis(const std::vector<Root>& vectors) {
  std::vector<Root> basis;
  for (const Root& v : vectors) {
    std::vector<Root> trial = basis;
    trial.push_back(v);
    if (rank_of(trial) > static_cast<int>(basis.size())) basis.push_back(v);
  }
  return basis;
}

Rational det_gram(const std::vector<Root>& basis, const RootSystem& rs) {
  int k = static_cast<int>(basis.size());
  if (k == 0) return 1;
  std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g[i][j] = bilinear(basis[i], basis[j], rs);
  // Fraction-free-ish Gaussian elimination.
  Rational det = 1;
  for (int c = 0; c < k; ++c) {
    int pivot = c;
    while (pivot < k && g[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(g[pivot], g[c]);
      det = -det;
    }
    det *= g[c][c];
    for (int r = c + 1; r < k; ++r) {
      Rational factor = g[r][c] / g[c][c];
      for (int j = c; j < k; ++j) g[r][j] -= factor * g[c][j];
    }
  }
  return det;
}

RootSystemPtr build_internal(const SuperType& type);

}  // namespace

Rational bilinear(const Root& a, const Root& b, const RootSystem& rs) {
  if (a.size() != rs.gram_diag.size() || b.size() != rs.gram_diag.size())
    throw DomainError("bilinear: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * rs.gram_diag[i];
  return s;
}

Root bar(const Root& alpha) {
  Root b = alpha;
  for (Rational& c : b)
    if (c < 0) c = -c;
  return b;
}

Rational incidence_pairing(const RootSystem& rs, const Root& lambda, const Root& alpha) {
  return rs.km() ? bilinear(lambda, alpha, rs) : bilinear(lambda, bar(alpha), rs);
}

bool is_root(const RootSystem& rs, const Root& a) {
  auto hit = [&](const std::vector<Root>& list) {
    return std::find(list.begin(), list.end(), a) != list.end();
  };
  return hit(rs.even_roots) || hit(rs.odd_roots);
}

bool is_isotropic_root(const RootSystem& rs, const Root& a) {
  return std::find(rs.isotropic.begin(), rs.isotropic.end(), a) != rs.isotropic.end();
}

std::string root_to_string(const SuperType& type, const Root& a) {
  std::string out;
  int ne = type.num_eps();
  for (size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 0) continue;
    Rational c = a[v];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    Rational mag = abs(c);
    if (mag != 1) out += rational_to_string(mag);
    out += static_cast<int>(v) < ne ? "e" + std::to_string(v + 1)
                                    : "d" + std::to_string(v - ne + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

void build_gl_roots(RootSystem& rs) {
  int m = rs.type.num_eps(), n = rs.type.num_delta(), dim = m + n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) {
        rs.even_roots.push_back(combine(dim, i, 1, j, -1));
        if (i < j) rs.positive_even.push_back(combine(dim, i, 1, j, -1));
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        rs.even_roots.push_back(combine(dim, m + i, 1, m + j, -1));
        if (i < j) rs.positive_even.push_back(combine(dim, m + i, 1, m + j, -1));
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Root pos = combine(dim, i, 1, m + j, -1);
      rs.odd_roots.push_back(pos);
      rs.odd_roots.push_back(negate(pos));
      rs.isotropic.push_back(pos);
      rs.isotropic.push_back(negate(pos));
      rs.omega.push_back(pos);
    }
  for (int i = 0; i + 1 < m; ++i)
    rs.weyl_generators.push_back(SignedPerm::transposition(dim, i, i + 1));
  for (int j = 0; j + 1 < n; ++j)
    rs.weyl_generators.push_back(SignedPerm::transposition(dim, m + j, m + j + 1));
}

void build_osp_roots(RootSystem& rs) {
  int m = rs.type.num_eps(), n = rs.type.num_delta(), dim = m + n;
  bool odd_r = rs.type.osp_odd();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Root a = combine(dim, i, s1, j, s2);
          rs.even_roots.push_back(a);
          if (s1 > 0) rs.positive_even.push_back(a);
        }
  if (odd_r)
    for (int i = 0; i < m; ++i) {
      rs.even_roots.push_back(unit(dim, i, 1));
      rs.even_roots.push_back(unit(dim, i, -1));
      rs.positive_even.push_back(unit(dim, i, 1));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Root a = combine(dim, m + i, s1, m + j, s2);
          rs.even_roots.push_back(a);
          if (s1 > 0) rs.positive_even.push_back(a);
        }
  for (int i = 0; i < n; ++i) {
    rs.even_roots.push_back(unit(dim, m + i, 2));
    rs.even_roots.push_back(unit(dim, m + i, -2));
    rs.positive_even.push_back(unit(dim, m + i, 2));
  }
  if (odd_r)
    for (int j = 0; j < n; ++j) {
      rs.odd_roots.push_back(unit(dim, m + j, 1));
      rs.odd_roots.push_back(unit(dim, m + j, -1));
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          Root a = combine(dim, i, s1, m + j, s2);
          rs.odd_roots.push_back(a);
          rs.isotropic.push_back(a);
          if (s1 > 0) rs.omega.push_back(a);
        }
  for (int i = 0; i + 1 < m; ++i)
    rs.weyl_generators.push_back(SignedPerm::transposition(dim, i, i + 1));
  if (odd_r) {
    if (m >= 1) rs.weyl_generators.push_back(SignedPerm::flip(dim, m - 1));
  } else if (m >= 2) {
    // Even orthogonal group: only even numbers of eps sign changes.
    SignedPerm dflip = SignedPerm::flip(dim, m - 2).then(SignedPerm::flip(dim, m - 1));
    rs.weyl_generators.push_back(dflip);
  }
  for (int j = 0; j + 1 < n; ++j)
    rs.weyl_generators.push_back(SignedPerm::transposition(dim, m + j, m + j + 1));
  if (n >= 1) rs.weyl_generators.push_back(SignedPerm::flip(dim, m + n - 1));
}

void build_strange_roots(RootSystem& rs) {
  int n = rs.type.n, dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        rs.even_roots.push_back(combine(dim, i, 1, j, -1));
        if (i < j) rs.positive_even.push_back(combine(dim, i, 1, j, -1));
      }
  if (rs.type.family == Family::q) {
    rs.odd_roots = rs.even_roots;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Root a(dim, Rational(0));
        a[i] += 1;
        a[j] += 1;
        rs.odd_roots.push_back(a);
        if (i < j) rs.odd_roots.push_back(negate(a));
      }
  }
  rs.isotropic = rs.positive_even;
  rs.omega = rs.positive_even;
  for (int i = 0; i + 1 < n; ++i)
    rs.weyl_generators.push_back(SignedPerm::transposition(dim, i, i + 1));
}

RootSystemPtr build_internal(const SuperType& type) {
  auto rs = std::make_shared<RootSystem>();
  rs->type = type;
  int ne = type.num_eps(), nd = type.num_delta();
  rs->gram_diag.assign(ne, Rational(1));
  rs->gram_diag.insert(rs->gram_diag.end(), nd, Rational(-1));

  switch (type.family) {
    case Family::gl:
    case Family::sl:
      build_gl_roots(*rs);
      break;
    case Family::osp:
      build_osp_roots(*rs);
      break;
    case Family::p:
    case Family::q:
      build_strange_roots(*rs);
      break;
  }

  rs->weyl_elements = generate_group(rs->weyl_generators, rs->dim());

  // Standard chain.
  if (rs->km()) {
    int len = std::min(ne, nd);
    for (int i = 1; i <= len; ++i)
      rs->standard_chain.push_back(combine(rs->dim(), ne - i, 1, ne + nd - i, -1));
  } else {
    for (int i = 1; 2 * i <= type.n; ++i)
      rs->standard_chain.push_back(combine(type.n, type.n - 2 * i, 1, type.n - 2 * i + 1, -1));
  }

  // Defect by brute-force search over Omega.
  rs->defect = 0;
  int cap = static_cast<int>(rs->omega.size());
  if (cap > 0) {
    std::vector<IsoSet> sets = enumerate_isosets(*rs, cap);
    for (const IsoSet& s : sets) rs->defect = std::max(rs->defect, static_cast<int>(s.size()));
  }
  return rs;
}

}  // namespace

RootSystemPtr build_root_system(const SuperType& type) {
  type.validate();
  return build_internal(type);
}

RootSystemPtr build_root_system_allow_trivial(const SuperType& type) {
  if (type.m < 0 || type.n < 0 || type.r < 0) throw DomainError("negative rank parameter");
  if (type.family == Family::sl && type.m == type.n && type.m > 0)
    throw DomainError("sl(m|n) requires m != n");
  return build_internal(type);
}

SuperType ds_target_type(const SuperType& t) {
  switch (t.family) {
    case Family::gl:
    case Family::sl:
      if (t.m < 1 || t.n < 1) throw DomainError("rank too small for reduction");
      return SuperType{t.family, t.m - 1, t.n - 1, 0};
    case Family::osp:
      if (t.r < 2 || t.n < 1) throw DomainError("rank too small for reduction");
      return SuperType{Family::osp, (t.r - 2) / 2, t.n - 1, t.r - 2};
    case Family::p:
    case Family::q:
      if (t.n < 2) throw DomainError("rank too small for reduction");
      return SuperType{t.family, 0, t.n - 2, 0};
  }
  throw DomainError("unreachable");
}

namespace {

SuperType reduced_target(const SuperType& t) { return ds_target_type(t); }

DsReduction reduce_along(const RootSystem& rs, const Root& beta, const Root& pairing_vector,
                         const std::vector<int>& dropped_labels) {
  DsReduction out;
  std::set<std::vector<Rational>> seen;
  std::vector<Root> all = rs.even_roots;
  all.insert(all.end(), rs.odd_roots.begin(), rs.odd_roots.end());
  Root minus_beta = negate(beta);
  for (const Root& a : all) {
    if (a == beta || a == minus_beta) continue;
    if (bilinear(a, pairing_vector, rs) != 0) continue;
    if (seen.insert(a).second) out.delta_beta.push_back(a);
  }
  std::sort(out.delta_beta.begin(), out.delta_beta.end(), root_less);

  std::vector<bool> drop(rs.dim(), false);
  for (int v : dropped_labels) drop[v] = true;
  for (int v = 0; v < rs.dim(); ++v)
    if (!drop[v]) out.surviving.push_back(v);

  out.reduced_type = reduced_target(rs.type);
  out.reduced = build_internal(out.reduced_type);

  // Structural comparison against the freshly built target.
  std::vector<int> new_index(rs.dim(), -1);
  for (size_t k = 0; k < out.surviving.size(); ++k) new_index[out.surviving[k]] = static_cast<int>(k);
  std::set<std::vector<Rational>> relabeled;
  bool clean = true;
  for (const Root& a : out.delta_beta) {
    Root b(out.surviving.size(), Rational(0));
    for (int v = 0; v < rs.dim(); ++v) {
      if (a[v] == 0) continue;
      if (new_index[v] < 0) {
        clean = false;
        break;
      }
      b[new_index[v]] = a[v];
    }
    if (!clean) break;
    relabeled.insert(b);
  }
  std::set<std::vector<Rational>> expected;
  for (const Root& a : out.reduced->even_roots) expected.insert(a);
  for (const Root& a : out.reduced->odd_roots) expected.insert(a);
  out.structural_match = clean && relabeled == expected;
  return out;
}

}  // namespace

DsReduction ds_reduction(const RootSystem& rs, const Root& beta) {
  if (!rs.km()) throw DomainError("use ds_reduction_pair for types p and q");
  if (!is_isotropic_root(rs, beta)) throw DomainError("beta is not an isotropic root");
  std::vector<int> dropped;
  for (int v = 0; v < rs.dim(); ++v)
    if (beta[v] != 0) dropped.push_back(v);
  return reduce_along(rs, beta, beta, dropped);
}

DsReduction ds_reduction_pair(const RootSystem& rs, int i, int j) {
  if (rs.km()) throw DomainError("pair datum applies to types p and q only");
  int n = rs.type.n;
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw DomainError("bad index pair");
  if (i > j) std::swap(i, j);
  Root beta = combine(n, i, 1, j, -1);
  Root beta_bar = combine(n, i, 1, j, 1);
  return reduce_along(rs, beta, beta_bar, {i, j});
}

SpanFormReport check_span_nondegenerate(const RootSystem& rs, const Root& beta) {
  DsReduction red = ds_reduction(rs, beta);
  std::vector<Root> basis = span_basis(red.delta_beta);
  Rational det = det_gram(basis, rs);
  return {det, det != 0, static_cast<int>(basis.size())};
}

SpanFormReport check_span_nondegenerate_pair(const RootSystem& rs, int i, int j) {
  DsReduction red = ds_reduction_pair(rs, i, j);
  std::vector<Root> basis = span_basis(red.delta_beta);
  Rational det = det_gram(basis, rs);
  return {det, det != 0, static_cast<int>(basis.size())};
}

std::vector<Rational> OneParamSubgroup::at(const Rational& t) const {
  if (t == 0) throw DomainError("one-parameter subgroup evaluated at 0");
  std::vector<Rational> out(exponents.size(), Rational(1));
  for (size_t v = 0; v < exponents.size(); ++v) {
    long e = exponents[v];
    Rational base = e >= 0 ? t : Rational(1) / t;
    for (long k = 0; k < std::labs(e); ++k) out[v] *= base;
  }
  return out;
}

OneParamSubgroup c_beta(const RootSystem& rs, const Root& beta) {
  if (rs.km()) {
    if (!is_root(rs, beta)) throw DomainError("beta is not a root");
  } else {
    if (std::find(rs.positive_even.begin(), rs.positive_even.end(), beta) ==
        rs.positive_even.end())
      throw DomainError("beta must be a positive even root in types p and q");
  }
  OneParamSubgroup c;
  c.exponents.resize(rs.dim());
  for (int v = 0; v < rs.dim(); ++v) {
    Rational e = rs.gram_diag[v] * beta[v];  // (basis_v, beta) for the diagonal form
    c.exponents[v] = rational_to_long(e);
  }
  return c;
}

bool is_isoset(const RootSystem& rs, const IsoSet& set) {
  for (size_t a = 0; a < set.size(); ++a) {
    for (size_t b = 0; b < set.size(); ++b) {
      if (a == b) continue;
      Rational pair = rs.km() ? bilinear(set[a], set[b], rs) : bilinear(set[a], bar(set[b]), rs);
      if (pair != 0) return false;
    }
    if (rs.km() && bilinear(set[a], set[a], rs) != 0) return false;
  }
  std::vector<Root> rows(set.begin(), set.end());
  return rank_of(rows) == static_cast<int>(set.size());
}

std::vector<IsoSet> enumerate_isosets(const RootSystem& rs, int size_cap) {
  std::vector<IsoSet> out;
  const std::vector<Root>& pool = rs.omega;
  std::vector<int> stack;
  auto emit = [&]() {
    IsoSet s;
    for (int idx : stack) s.push_back(pool[idx]);
    out.push_back(std::move(s));
  };
  std::function<void(int)> walk = [&](int start) {
    if (!stack.empty()) emit();
    if (static_cast<int>(stack.size()) >= size_cap) return;
    for (int next = start; next < static_cast<int>(pool.size()); ++next) {
      stack.push_back(next);
      IsoSet candidate;
      for (int idx : stack) candidate.push_back(pool[idx]);
      if (is_isoset(rs, candidate)) walk(next + 1);
      stack.pop_back();
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const IsoSet& a, const IsoSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return root_less(a[i], b[i]);
    return false;
  });
  return out;
}

}  // namespace wgd
