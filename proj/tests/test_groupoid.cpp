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

#include <doctest.h>

#include <random>
#include <set>

#include "weylgpd/errors.hpp"
#include "weylgpd/groupoid.hpp"
#include "weylgpd/poly_text.hpp"

using namespace wgd;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

GroupoidGenerator tau_gen(const Root& alpha, const Rational& t) {
  GroupoidGenerator g;
  g.kind = GroupoidGenerator::Kind::Tau;
  g.alpha = alpha;
  g.t = t;
  return g;
}

}  // namespace

TEST_CASE("atyp") {
  SUBCASE("gl(2|1) at (3,1|-1)") {
    Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    Point lambda = {q(3), q(1), q(-1)};
    CHECK(atyp(s, lambda) == 1);
    IncidenceData data = maximal_isoset_at(s, lambda);
    CHECK(data.e_set.size() == 2);  // +-(e2-d1)
    REQUIRE(data.f_set.size() == 1);
    CHECK(data.f_set.front() == Root{q(0), q(1), q(-1)});
  }
  SUBCASE("zero weight in gl(2|2) is maximally atypical") {
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Additive);
    Point zero(4, q(0));
    CHECK(atyp(s, zero) == 2);
    IncidenceData data = maximal_isoset_at(s, zero);
    CHECK(data.e_set.size() == s.rs->isotropic.size());
    CHECK(data.f_set.size() == 2);
  }
  SUBCASE("q(3) torus point with no incidences") {
    Setting s = make_setting(SuperType::make_q(3), Space::Multiplicative);
    Point lambda = {q(2), q(-1, 2), q(5)};
    CHECK(atyp(s, lambda) == 0);
    CHECK(maximal_isoset_at(s, lambda).e_set.empty());
  }
  SUBCASE("torus points reject zero coordinates") {
    Setting s = make_setting(SuperType::make_q(3), Space::Multiplicative);
    CHECK_THROWS_AS(atyp(s, Point{q(1), q(0), q(1)}), DomainError);
  }
}

TEST_CASE("apply_generator") {
  SUBCASE("gl(1|1): translation along the line") {
    Setting s = make_setting(SuperType::make_gl(1, 1), Space::Additive);
    Root beta = s.rs->standard_chain.front();
    Point lambda = {q(5), q(-5)};
    Point moved = apply_generator(s, tau_gen(beta, q(3)), lambda);
    CHECK(moved == Point{q(8), q(-8)});
    // outside the line the morphism is undefined
    CHECK_THROWS_AS(apply_generator(s, tau_gen(beta, q(3)), Point{q(5), q(1)}),
                    NotDefinedAtError);
  }
  SUBCASE("q(3) torus translation via the one-parameter subgroup") {
    Setting s = make_setting(SuperType::make_q(3), Space::Multiplicative);
    Root alpha = {q(1), q(-1), q(0)};  // e1-e2, with x1*x2 = 1 at the base
    Point lambda = {q(2), q(1, 2), q(7)};
    Point moved = apply_generator(s, tau_gen(alpha, q(3)), lambda);
    CHECK(moved == Point{q(6), q(1, 6), q(7)});
    CHECK(in_tau_domain(s, moved, alpha));  // image stays in the subtorus
    CHECK_THROWS_AS(apply_generator(s, tau_gen(alpha, q(0)), lambda), DomainError);
    CHECK_THROWS_AS(apply_generator(s, tau_gen(alpha, q(3)), Point{q(2), q(3), q(7)}),
                    NotDefinedAtError);
  }
  SUBCASE("weyl elements act everywhere") {
    Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    GroupoidGenerator g;
    g.kind = GroupoidGenerator::Kind::Weyl;
    g.w = SignedPerm::transposition(3, 0, 1);
    CHECK(apply_generator(s, g, Point{q(3), q(1), q(-1)}) == Point{q(1), q(3), q(-1)});
  }
  SUBCASE("additive tau keeps the hyperplane (isotropy)") {
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Additive);
    Root beta = s.rs->standard_chain.front();
    Point lambda = {q(1), q(2), q(5), q(-2)};
    Point moved = apply_generator(s, tau_gen(beta, q(7)), lambda);
    CHECK(in_tau_domain(s, moved, beta));
  }
}

TEST_CASE("orbit_description") {
  Setting gl11 = make_setting(SuperType::make_gl(1, 1), Space::Additive);
  OrbitDescription line = orbit_description(gl11, Point{q(2), q(-2)});
  CHECK(line.dim == 1);
  OrbitDescription typical = orbit_description(gl11, Point{q(2), q(3)});
  CHECK(typical.dim == 0);
  CHECK(typical.e_set.empty());

  Setting gl22 = make_setting(SuperType::make_gl(2, 2), Space::Additive);
  OrbitDescription zero = orbit_description(gl22, Point(4, q(0)));
  CHECK(zero.dim == 2);
}

TEST_CASE("orbit_contains and equivalent") {
  SUBCASE("identity witness") {
    Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    Point lambda = {q(3), q(1), q(-1)};
    auto w = orbit_contains(s, lambda, lambda);
    REQUIRE(w);
    CHECK(replay_witness(s, lambda, *w) == lambda);
  }
  SUBCASE("gl(1|1) line mates") {
    Setting s = make_setting(SuperType::make_gl(1, 1), Space::Additive);
    CHECK(equivalent(s, Point{q(1), q(-1)}, Point{q(7), q(-7)}));
    CHECK(!equivalent(s, Point{q(1), q(0)}, Point{q(2), q(0)}));
  }
  SUBCASE("typical points: orbit is the finite Weyl orbit") {
    Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    Point lambda = {q(3), q(1), q(5)};
    CHECK(atyp(s, lambda) == 0);
    CHECK(equivalent(s, lambda, Point{q(1), q(3), q(5)}));
    // adding an isotropic root at a typical point leaves the orbit
    Point shifted = {q(3), q(2), q(4)};  // lambda + (e2 - d1)
    CHECK(!equivalent(s, lambda, shifted));
  }
  SUBCASE("multiplicative witnesses replay") {
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Multiplicative);
    Point lambda = {q(2), q(3), q(2), q(7)};  // x1 = y1: first chain incidence, conjugated
    REQUIRE(atyp(s, lambda) == 1);
    IsoSet f = maximal_isoset_at(s, lambda).f_set;
    REQUIRE(f.size() == 1);
    Point moved = apply_generator(s, tau_gen(f.front(), q(5, 3)), lambda);
    auto w = orbit_contains(s, lambda, moved);
    REQUIRE(w);
    CHECK(replay_witness(s, lambda, *w) == moved);
    CHECK(equivalent(s, moved, lambda));
    CHECK(!equivalent(s, lambda, Point{q(2), q(3), q(5), q(7)}));
  }
  SUBCASE("q(3) additive orbits") {
    Setting s = make_setting(SuperType::make_q(3), Space::Additive);
    Point lambda = {q(4), q(2), q(-2)};  // (lambda, bar(e2-e3)) = 0
    CHECK(atyp(s, lambda) == 1);
    Point moved = apply_generator(s, tau_gen(Root{q(0), q(1), q(-1)}, q(3)), lambda);
    CHECK(equivalent(s, lambda, moved));
  }
  SUBCASE("q(3) torus orbits") {
    Setting s = make_setting(SuperType::make_q(3), Space::Multiplicative);
    Point lambda = {q(2), q(1, 2), q(7)};  // x1*x2 = 1
    REQUIRE(atyp(s, lambda) == 1);
    Point moved = apply_generator(s, tau_gen(Root{q(1), q(-1), q(0)}, q(3)), lambda);
    auto w = orbit_contains(s, lambda, moved);
    REQUIRE(w);
    CHECK(replay_witness(s, lambda, *w) == moved);
    // permuted-and-translated mates are still equivalent
    CHECK(equivalent(s, moved, Point{q(1, 6), q(6), q(7)}));
    CHECK(!equivalent(s, lambda, Point{q(2), q(1, 2), q(8)}));
  }
}

TEST_CASE("p-type groupoid") {
  SUBCASE("p(3) torus translations") {
    Setting s = make_setting(SuperType::make_p(3), Space::Multiplicative);
    Root alpha = {q(1), q(-1), q(0)};
    Point lambda = {q(2), q(1, 2), q(5)};
    Point moved = apply_generator(s, tau_gen(alpha, q(4)), lambda);
    CHECK(moved == Point{q(8), q(1, 8), q(5)});
    CHECK(equivalent(s, lambda, moved));
    CHECK_THROWS_AS(apply_generator(s, tau_gen(alpha, q(4)), Point{q(2), q(2), q(5)}),
                    NotDefinedAtError);
  }
  SUBCASE("p(3) additive machinery is experimental but functional") {
    CHECK_THROWS_AS(make_setting(SuperType::make_p(3), Space::Additive), DomainError);
    SettingOptions opts;
    opts.allow_experimental = true;
    Setting s = make_setting(SuperType::make_p(3), Space::Additive, opts);
    CHECK(s.experimental);
    // bar-pairing domain: (lambda, e2+e3) = 0
    Point lambda = {q(7), q(3), q(-3)};
    CHECK(atyp(s, lambda) == 1);
    Point moved = apply_generator(s, tau_gen(Root{q(0), q(1), q(-1)}, q(2)), lambda);
    CHECK(moved == Point{q(7), q(5), q(-5)});
    CHECK(equivalent(s, lambda, moved));
  }
}

TEST_CASE("orbit invariants") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> val(-3, 3);
  SUBCASE("membership invariance along replayed witnesses") {
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Additive);
    std::vector<Candidate> cands = generator_candidates(s, 3);
    for (int k = 0; k < 30; ++k) {
      Point lambda = {q(val(rng)), q(val(rng)), q(val(rng)), q(0)};
      lambda[3] = -lambda[1];  // incidence with e2-d2
      IsoSet f = maximal_isoset_at(s, lambda).f_set;
      OrbitWitness witness;
      witness.w = s.rs->weyl_elements[rng() % s.rs->weyl_elements.size()];
      for (const Root& alpha : f) witness.taus.push_back({alpha, q(val(rng))});
      Point endpoint = replay_witness(s, lambda, witness);
      for (const Candidate& c : cands)
        CHECK(c.poly.evaluate(lambda) == c.poly.evaluate(endpoint));
    }
  }
  SUBCASE("dim equals atyp on a grid") {
    for (Space space : {Space::Additive, Space::Multiplicative}) {
      Setting s = make_setting(SuperType::make_gl(2, 2), space);
      int checked = 0;
      std::vector<Rational> pool = space == Space::Additive
                                       ? std::vector<Rational>{q(0), q(1), q(-1), q(2)}
                                       : std::vector<Rational>{q(1), q(-1), q(2), q(1, 2)};
      for (const Rational& a : pool)
        for (const Rational& b : pool)
          for (const Rational& c : pool) {
            if (checked >= 50) break;
            Point p = {a, b, c, pool[checked % pool.size()]};
            CHECK(orbit_description(s, p).dim == atyp(s, p));
            ++checked;
          }
    }
  }
  SUBCASE("one generator step preserves the orbit") {
    Setting s = make_setting(SuperType::make_gl(2, 1), Space::Additive);
    for (int k = 0; k < 20; ++k) {
      Point lambda = {q(val(rng)), q(val(rng)), q(0)};
      lambda[2] = -lambda[1];
      Point moved = apply_generator(s, tau_gen(s.rs->standard_chain.front(), q(val(rng))), lambda);
      CHECK(equivalent(s, lambda, moved));
      CHECK(atyp(s, lambda) == atyp(s, moved));
      CHECK(orbit_contains(s, moved, lambda).has_value());
    }
  }
  SUBCASE("surplus incidences are Weyl-conjugate into the maximal set") {
    // for beta in E \ F there is an even reflection fixing the point and
    // carrying beta into +-F
    Setting s = make_setting(SuperType::make_gl(2, 2), Space::Additive);
    int exercised = 0;
    for (int k = 0; k < 40; ++k) {
      Point lambda = {q(val(rng)), q(val(rng)), q(0), q(0)};
      lambda[2] = -lambda[0];
      lambda[3] = -lambda[1];
      IncidenceData data = maximal_isoset_at(s, lambda);
      std::set<Root> f_pm;
      for (const Root& a : data.f_set) {
        f_pm.insert(a);
        Root neg = a;
        for (Rational& c : neg) c = -c;
        f_pm.insert(neg);
      }
      for (const Root& beta : data.e_set) {
        if (f_pm.count(beta)) continue;
        bool found = false;
        for (const Root& gamma : s.rs->positive_even) {
          if (bilinear(gamma, lambda, *s.rs) != 0) continue;
          // reflection through gamma as a point map
          auto reflect = [&](const Root& x) {
            Rational coef = 2 * bilinear(x, gamma, *s.rs) / bilinear(gamma, gamma, *s.rs);
            Root out = x;
            for (size_t v = 0; v < out.size(); ++v) out[v] -= coef * gamma[v];
            return out;
          };
          if (reflect(lambda) == lambda && f_pm.count(reflect(beta))) {
            found = true;
            break;
          }
        }
        CHECK(found);
        ++exercised;
      }
    }
    CHECK(exercised > 0);
  }
}
